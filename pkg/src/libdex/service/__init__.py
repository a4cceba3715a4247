from .app import DEFAULT_ADDR, DEFAULT_STORE, create_app

__all__ = ["DEFAULT_ADDR", "DEFAULT_STORE", "create_app"]
