"""Run the doctest examples embedded in the package docstrings."""

import doctest

import pytest

import foldeg.bott
import foldeg.exact
import foldeg.fields
import foldeg.pencil
import foldeg.polyfit

MODULES = (
    foldeg.exact,
    foldeg.fields,
    foldeg.bott,
    foldeg.pencil,
    foldeg.polyfit,
)


@pytest.mark.parametrize("module", MODULES, ids=lambda m: m.__name__)
def test_module_doctests(module):
    result = doctest.testmod(module)
    assert result.failed == 0
    assert result.attempted > 0
