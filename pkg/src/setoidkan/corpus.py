"""The bundled default corpus."""

from importlib import resources

from .formats import parse

_DEFAULT = None


def default_text():
    return resources.files(__package__).joinpath("data/default.corpus").read_text()


def default_corpus():
    """The bundled corpus, parsed once and shared."""
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = parse(default_text())
    return _DEFAULT
