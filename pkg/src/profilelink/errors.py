"""Exception types raised across the package."""


class ProfileLinkError(Exception):
    """Base class for every error raised by profilelink."""


class InvalidId(ProfileLinkError, ValueError):
    """An identifier is not 1-20 ASCII decimal digits."""


class DuplicateProfile(ProfileLinkError, ValueError):
    def __init__(self, profile_id):
        super().__init__(f"duplicate profile id {profile_id}")
        self.profile_id = profile_id


class UnknownProfile(ProfileLinkError, KeyError):
    def __init__(self, profile_id):
        super().__init__(profile_id)
        self.profile_id = profile_id

    def __str__(self):
        return f"unknown profile {self.profile_id}"


class InvalidPair(ProfileLinkError, ValueError):
    """Both ends of an ordered pair are the same profile."""


class InvalidPath(ProfileLinkError, ValueError):
    """Consecutive path nodes are not joined by an edge."""


class DegenerateBase(ProfileLinkError, ValueError):
    """WAF scaling was requested for a base with nothing to divide by."""


class MissingUserId(ProfileLinkError, ValueError):
    """A raw dump carried no ``userid=`` line."""


class ParseError(ProfileLinkError, ValueError):
    def __init__(self, message, lineno=None, source=None):
        self.lineno = lineno
        self.source = source
        where = ""
        if source is not None:
            where += f"{source}:"
        if lineno is not None:
            where += f"{lineno}:"
        super().__init__(f"{where} {message}" if where else message)


class ConfigError(ParseError):
    """Malformed weights or alias file."""
