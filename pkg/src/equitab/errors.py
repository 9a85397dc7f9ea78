class ResourceLimitError(RuntimeError):
    """A configured size or complexity guard was exceeded."""
