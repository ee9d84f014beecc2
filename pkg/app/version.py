"""
Application Version and Build Information
"""
__version__ = "1.0.0"
REPORT_SCHEMA_VERSION = 1


def get_version_info():
    """Get version and engine configuration information"""
    from app.config import get_settings

    settings = get_settings()

    return {
        "version": __version__,
        "report_schema": REPORT_SCHEMA_VERSION,
        "engine": {
            "threads": settings.threads,
            "memo_enabled": settings.memo_enabled,
        },
    }


def get_version_string() -> str:
    """Get version string"""
    return __version__
