"""Set algebra, space models, graph semantics, ring arithmetic and oracles"""
