"""Test suite for farey-duality."""
