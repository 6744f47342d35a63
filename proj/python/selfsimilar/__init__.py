import json

from ._core import SsgError, k_theory, smith_normal_form, verify_correspondence
from . import _core

__all__ = [
    "SsgError",
    "analyze",
    "k_theory",
    "katsura",
    "minimal_strongly_fixed_paths",
    "normalize",
    "smith_normal_form",
    "validate",
    "verify_correspondence",
]


def _text(document):
    return document if isinstance(document, str) else json.dumps(document)


def validate(document):
    _core.validate(_text(document))


def normalize(document):
    return json.loads(_core.normalize(_text(document)))


def analyze(document, bound=10000):
    return json.loads(_core.analyze(_text(document), bound))


def katsura(A, B, ktheory=False):
    return json.loads(_core.katsura(A, B, ktheory))


def minimal_strongly_fixed_paths(document, g, bound=10000):
    return _core.minimal_strongly_fixed_paths(_text(document), str(g), bound)
