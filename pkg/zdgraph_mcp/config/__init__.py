"""Configuration module for the zero-divisor graph lab"""
