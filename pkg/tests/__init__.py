"""
Test Suite for El Jefe Dashboard

Comprehensive tests for all components of the dashboard system.
"""