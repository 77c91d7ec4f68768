"""
Command-line surface of magnetic-weyl
"""
