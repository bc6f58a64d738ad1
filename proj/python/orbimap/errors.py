class OrbimapError(ValueError):
    """Raised for library errors; ``code`` names the error kind."""

    def __init__(self, code, message):
        super().__init__(message)
        self.code = code
