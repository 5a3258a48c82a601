"""Tests for centra."""
