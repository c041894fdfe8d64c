"""Pinned verdicts on the bundled systems"""
