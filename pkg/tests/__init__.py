"""Test suite for the valspin package."""
