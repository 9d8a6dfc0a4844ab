"""Utility modules for the zero-divisor graph lab"""
