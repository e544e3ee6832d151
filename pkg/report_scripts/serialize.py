"""Structured reports: one dict per command, serialized deterministically with orjson."""
import orjson

from algebra_scripts.settings import DEFAULT_SETTINGS

DUMP_OPTIONS = orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS | orjson.OPT_NON_STR_KEYS


def build_report(command, result, settings=DEFAULT_SETTINGS):
    """
    Wraps a command result with the configuration it was computed under.

    Args:
        command (str): Command name as typed on the command line.
        result (dict): JSON-ready payload.
        settings (Settings): Configuration to embed.

    Returns:
        dict: {"command", "config", "result"}.
    """
    return {"command": command, "config": settings.as_record(), "result": result}


def dumps(report):
    return orjson.dumps(report, option=DUMP_OPTIONS)
