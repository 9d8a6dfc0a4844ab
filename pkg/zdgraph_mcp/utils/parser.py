"""Text syntax for sets, models, flavors, functions, alphabets and psi files"""

import json
import re
from fractions import Fraction
from typing import Any, List, Optional, Tuple

from ..core.ring import FinSuppFn
from ..core.setalg import GroundSet, PeriodicSet
from ..core.topology import ClosedSetIdeal, SpaceModel
from ..core.zdgraph import GraphFlavor
from ..utils.errors import InvalidSetError, SyntaxParseError


class SyntaxParser:
    """Parser for the flat text forms used in config files, flags and tool arguments"""

    POINTS = re.compile(r'^\{\s*(\d+(?:\s*,\s*\d+)*)?\s*\}$')
    INTERVAL = re.compile(r'^\[\s*(\d+)\s*\.\.\s*(\d+)\s*\]$')
    COFINITE = re.compile(r'^cofinite(?:\s+del\s+(\{[^}]*\}))?$')
    PERIODIC = re.compile(
        r'^mod\s+(\d+)\s+res\s+(\{[^}]*\})(?:\s+add\s+(\{[^}]*\}))?(?:\s+del\s+(\{[^}]*\}))?$'
    )
    GROUND = re.compile(r'^(?:countable|finite:(\d+))$')
    IDEAL = re.compile(r'^(all|finite|powerset:(.+))$')
    NUMBER = re.compile(r'^-?\d+(?:/\d+)?$')
    FUNCTION_ENTRY = re.compile(r'^(\d+)\s*:\s*(-?\d+(?:/\d+)?)$')

    NAMED_SETS = {
        "empty": PeriodicSet.empty,
        "naturals": PeriodicSet.naturals,
        "evens": lambda: PeriodicSet.residue_class(2, [0]),
        "odds": lambda: PeriodicSet.residue_class(2, [1]),
    }

    def __init__(self, text: str):
        """Initialize parser

        Args:
            text: Raw text to parse, surrounding whitespace is ignored
        """
        self.text = text.strip()

    def _points(self, text: str) -> List[int]:
        match = self.POINTS.match(text.strip())
        if not match:
            raise SyntaxParseError(f"Expected a point list like {{0,1}}, got '{text}'")
        if not match.group(1):
            return []
        return [int(p) for p in match.group(1).split(",")]

    def parse_set(self) -> PeriodicSet:
        """Parse a set

        Supports: empty, naturals, evens, odds, {0,1,2}, [a..b],
        cofinite del {..}, mod m res {..} add {..} del {..}

        Returns:
            Canonical PeriodicSet

        Raises:
            SyntaxParseError: If the text matches no set form
            InvalidSetError: If a residue system is malformed
        """
        text = self.text
        if text in self.NAMED_SETS:
            return self.NAMED_SETS[text]()
        if self.POINTS.match(text):
            return PeriodicSet.from_points(self._points(text))

        interval = self.INTERVAL.match(text)
        if interval:
            low, high = int(interval.group(1)), int(interval.group(2))
            if low > high:
                raise InvalidSetError(f"Empty interval [{low}..{high}]")
            return PeriodicSet.interval(low, high)

        cofinite = self.COFINITE.match(text)
        if cofinite:
            removed = self._points(cofinite.group(1)) if cofinite.group(1) else []
            return PeriodicSet.cofinite(removed)

        periodic = self.PERIODIC.match(text)
        if periodic:
            modulus = int(periodic.group(1))
            residues = self._points(periodic.group(2))
            if modulus < 1 or any(r >= modulus for r in residues):
                raise InvalidSetError(f"Residues {residues} out of range for modulus {modulus}")
            added = self._points(periodic.group(3)) if periodic.group(3) else []
            removed = self._points(periodic.group(4)) if periodic.group(4) else []
            base = PeriodicSet.residue_class(modulus, residues)
            return base.union(PeriodicSet.from_points(added)).difference(
                PeriodicSet.from_points(removed)
            )

        raise SyntaxParseError(f"Unrecognized set syntax: '{text}'")

    def parse_ground(self) -> GroundSet:
        match = self.GROUND.match(self.text)
        if not match:
            raise SyntaxParseError(f"Ground must be 'countable' or 'finite:n', got '{self.text}'")
        if match.group(1) is None:
            return GroundSet.countable()
        return GroundSet.finite(int(match.group(1)))

    def parse_ideal(self) -> ClosedSetIdeal:
        match = self.IDEAL.match(self.text)
        if not match:
            raise SyntaxParseError(
                f"Ideal must be 'all', 'finite' or 'powerset:<set>', got '{self.text}'"
            )
        if match.group(1) == "all":
            return ClosedSetIdeal.all_closed()
        if match.group(1) == "finite":
            return ClosedSetIdeal.finite_sets()
        return ClosedSetIdeal.power_set_of(SyntaxParser(match.group(2)).parse_set())

    def parse_flavor(self) -> GraphFlavor:
        try:
            return GraphFlavor(self.text.lower())
        except ValueError:
            raise SyntaxParseError(f"Flavor must be 'cp' or 'cpinf', got '{self.text}'")

    def parse_number(self) -> Fraction:
        if not self.NUMBER.match(self.text):
            raise SyntaxParseError(f"Expected an integer or fraction like -2/3, got '{self.text}'")
        if self.text.endswith("/0"):
            raise SyntaxParseError(f"Zero denominator in '{self.text}'")
        return Fraction(self.text)

    def parse_alphabet(self) -> Tuple[Fraction, ...]:
        """Parse a comma separated value list, braces optional: 1,2 or {1,-1/2}"""
        body = self.text
        if body.startswith("{") and body.endswith("}"):
            body = body[1:-1]
        items = [item.strip() for item in body.split(",") if item.strip()]
        if not items:
            raise SyntaxParseError("Alphabet is empty")
        return tuple(SyntaxParser(item).parse_number() for item in items)

    def parse_function(self) -> FinSuppFn:
        """Parse a function literal like {0:5, 1:-2/3}"""
        if not (self.text.startswith("{") and self.text.endswith("}")):
            raise SyntaxParseError(f"Function literal must be braced, got '{self.text}'")
        body = self.text[1:-1].strip()
        values = {}
        if body:
            for entry in body.split(","):
                match = self.FUNCTION_ENTRY.match(entry.strip())
                if not match:
                    raise SyntaxParseError(f"Bad function entry '{entry.strip()}' in '{self.text}'")
                point = int(match.group(1))
                if point in values:
                    raise SyntaxParseError(f"Point {point} appears twice in '{self.text}'")
                values[point] = SyntaxParser(match.group(2)).parse_number()
        return FinSuppFn.of(values)

    def parse_psi(self) -> List[Tuple[Any, Any]]:
        """Parse a JSON list of [x_vertex, y_vertex] pairs"""
        try:
            data = json.loads(self.text)
        except json.JSONDecodeError as e:
            raise SyntaxParseError(f"psi is not valid JSON: {e}")
        if not isinstance(data, list) or not all(
            isinstance(pair, list) and len(pair) == 2 for pair in data
        ):
            raise SyntaxParseError("psi must be a JSON list of [x_vertex, y_vertex] pairs")
        return [tuple(pair) for pair in data]


def parse_set(text: str) -> PeriodicSet:
    return SyntaxParser(text).parse_set()


def parse_model(ground: str, ideal: str) -> SpaceModel:
    """Convenience function to build a model from its two text parts

    Args:
        ground: 'countable' or 'finite:n'
        ideal: 'all', 'finite' or 'powerset:<set>'

    Returns:
        Validated SpaceModel
    """
    return SpaceModel.of(SyntaxParser(ground).parse_ground(), SyntaxParser(ideal).parse_ideal())


def parse_flavor(text: str) -> GraphFlavor:
    return SyntaxParser(text).parse_flavor()


def parse_alphabet(text: str) -> Tuple[Fraction, ...]:
    return SyntaxParser(text).parse_alphabet()


def parse_function(text: str) -> FinSuppFn:
    return SyntaxParser(text).parse_function()


def parse_window(text: Optional[str]) -> Optional[PeriodicSet]:
    if text is None or not text.strip():
        return None
    return SyntaxParser(text).parse_set()


def parse_psi(text: str) -> List[Tuple[Any, Any]]:
    return SyntaxParser(text).parse_psi()
