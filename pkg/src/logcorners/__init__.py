"""Exact symbolic engine for log functions and forms on manifolds with log corners."""
