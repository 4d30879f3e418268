"""Unit test package for latmed."""
