"""Shared modules for finite semigroups and their enhanced power graphs"""
