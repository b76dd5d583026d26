"""Test suite for Coulomb Kit"""
