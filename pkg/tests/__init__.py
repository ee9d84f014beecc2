# Makes `tests.*` imports work for pytest collection.

