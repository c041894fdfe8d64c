"""Tests for abc-justness"""
