"""
Storage Services Layer

This layer abstracts file access so controllers never touch paths or
formats directly.
"""

from .json_storage_service import JsonStorageService
from .storage_service import StorageService

# Create singleton instance
storage_service: StorageService = JsonStorageService()

__all__ = ["storage_service", "StorageService", "JsonStorageService"]
