from .factory import Factory

__all__ = ["Factory"]
