"""HTTP service exposing the sumsetlab operations as JSON endpoints."""

from .app import app, create_app

__all__ = ["app", "create_app"]
