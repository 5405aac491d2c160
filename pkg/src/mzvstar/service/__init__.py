"""HTTP service layer: FastAPI app factory and wire models."""

from .app import create_app

__all__ = ["create_app"]
