"""Define roy-largest-root version information."""

# We follow Semantic Versioning (https://semver.org/)

# Example, '0.4.0-dev'
__version__ = '0.2.1'
