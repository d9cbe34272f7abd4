"""CLI utilities module"""
