"""Shipped fixtures: link diagrams, quandles, forms, and expected values.

Layout (under the package's catalog/ directory, or the directory named
by the QBEADS_CATALOG environment variable):

    catalog/links/<name>.diagram      explicit signed-crossing diagrams
    catalog/quandles/<id>.quandle     operation tables
    catalog/forms/<id>.form           bilinear form families
    catalog/expected/<form-id>.json   expected invariant per link

Each .form file names its quandle in a ``# quandle: <id>`` comment.
Expected files map link name -> term list [[exponent, multiplicity],...].
"""

import json
import os
import re
from dataclasses import dataclass, field as dataclass_field
from importlib import resources
from pathlib import Path

from .diagram import load_diagram
from .errors import InputError
from .forms import load_form as _load_form_file
from .invariant import InvariantPolynomial
from .quandle import load_quandle as _load_quandle_file

CATALOG_ENV = "QBEADS_CATALOG"


def catalog_root():
    override = os.environ.get(CATALOG_ENV)
    if override:
        root = Path(override)
        if not root.is_dir():
            raise InputError(f"{CATALOG_ENV}={override!r} is not a directory")
        return root
    return Path(resources.files("qbeads")) / "catalog"


def _names(subdir, suffix):
    root = catalog_root() / subdir
    if not root.is_dir():
        return []
    return sorted(p.stem for p in root.glob(f"*{suffix}"))


def list_links():
    return _names("links", ".diagram")


def list_quandles():
    return _names("quandles", ".quandle")


def list_forms():
    return _names("forms", ".form")


def load_quandle(name):
    path = catalog_root() / "quandles" / f"{name}.quandle"
    if not path.is_file():
        raise InputError(
            f"unknown catalog quandle {name!r}; available: {', '.join(list_quandles())}"
        )
    return _load_quandle_file(path, name=name)


def load_form(name):
    path = catalog_root() / "forms" / f"{name}.form"
    if not path.is_file():
        raise InputError(
            f"unknown catalog form {name!r}; available: {', '.join(list_forms())}"
        )
    text = path.read_text(encoding="utf-8")
    m = re.search(r"^#\s*quandle\s*:\s*(\S+)", text, re.MULTILINE)
    if not m:
        raise InputError(f"form file {path} lacks a '# quandle: <id>' comment")
    quandle = load_quandle(m.group(1))
    return _load_form_file(path, quandle, name=name)


def form_quandle_id(name):
    """The catalog quandle id a catalog form was validated against."""
    path = catalog_root() / "forms" / f"{name}.form"
    if not path.is_file():
        raise InputError(f"unknown catalog form {name!r}")
    m = re.search(
        r"^#\s*quandle\s*:\s*(\S+)", path.read_text(encoding="utf-8"), re.MULTILINE
    )
    if not m:
        raise InputError(f"form file {path} lacks a '# quandle: <id>' comment")
    return m.group(1)


def expected_table(form_name):
    """Expected invariant per link for a catalog form, or None.

    Returns {link name: InvariantPolynomial}.
    """
    path = catalog_root() / "expected" / f"{form_name}.json"
    if not path.is_file():
        return None
    data = json.loads(path.read_text(encoding="utf-8"))
    return {
        link: InvariantPolynomial.from_term_list(terms)
        for link, terms in data["expected"].items()
    }


@dataclass
class CatalogEntry:
    name: str
    diagram: object
    pd: str = None
    orientation: str = None
    expected: dict = dataclass_field(default_factory=dict)


def load(name):
    """Load one catalog link with its expected polynomials per form."""
    path = catalog_root() / "links" / f"{name}.diagram"
    if not path.is_file():
        raise InputError(
            f"unknown catalog link {name!r}; available: {', '.join(list_links())}"
        )
    diagram = load_diagram(path)
    diagram.validate()
    expected = {}
    for form_name in list_forms():
        table = expected_table(form_name)
        if table and name in table:
            expected[form_name] = table[name]
    return CatalogEntry(
        name=name,
        diagram=diagram,
        pd=diagram.meta.get("pd"),
        orientation=diagram.meta.get("orientation"),
        expected=expected,
    )
