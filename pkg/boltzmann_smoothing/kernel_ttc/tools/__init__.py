"""
Cross-section contracts and shared kernel caches.
"""
