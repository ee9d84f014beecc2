"""
Singular vectors, the Shapovalov form and quotient modules
"""
