"""Tiny parser for Laurent polynomial expressions like "x^6+y^2+x^2*y^6".

Grammar: sum of signed terms; a term is a product of integer constants and
factors x^e / y^e with optional '*' between them; exponents are (possibly
negative) integers, a bare variable means exponent 1.
Returns {(i, j): coefficient} with zero coefficients dropped.
"""

from __future__ import annotations

import re

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>[xy])|(?P<op>[-+*^]))")


class LaurentParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at character {pos})")
        self.pos = pos


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, object, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None or m.end() == pos:
                raise LaurentParseError(f"unexpected character {text[pos]!r}",
                                        pos)
            if m.group("num") is not None:
                self.tokens.append(("num", int(m.group("num")), pos))
            elif m.group("var") is not None:
                self.tokens.append(("var", m.group("var"), pos))
            else:
                self.tokens.append(("op", m.group("op"), pos))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise LaurentParseError("unexpected end of expression",
                                    len(self.text))
        self.i += 1
        return tok

    def parse(self) -> dict:
        result: dict[tuple[int, int], int] = {}
        if self.peek() is None:
            raise LaurentParseError("empty expression", 0)
        sign = self._sign(required=False)
        while True:
            key, coeff = self._term()
            result[key] = result.get(key, 0) + sign * coeff
            tok = self.peek()
            if tok is None:
                break
            if tok[0] == "op" and tok[1] in "+-":
                sign = self._sign(required=True)
            else:
                raise LaurentParseError(f"unexpected {tok[1]!r}", tok[2])
        return {k: v for k, v in result.items() if v}

    def _sign(self, required: bool) -> int:
        sign = 1
        seen = False
        while True:
            tok = self.peek()
            if tok is not None and tok[0] == "op" and tok[1] in "+-":
                self.take()
                if tok[1] == "-":
                    sign = -sign
                seen = True
            else:
                break
        if required and not seen:
            raise LaurentParseError("operator expected", len(self.text))
        return sign

    def _term(self) -> tuple[tuple[int, int], int]:
        coeff = 1
        exp = {"x": 0, "y": 0}
        saw_factor = False
        while True:
            tok = self.peek()
            if tok is None:
                break
            kind, val, pos = tok
            if kind == "num":
                self.take()
                coeff *= val
                saw_factor = True
            elif kind == "var":
                self.take()
                e = 1
                nxt = self.peek()
                if nxt is not None and nxt[:2] == ("op", "^"):
                    self.take()
                    e = self._signed_int()
                exp[val] += e
                saw_factor = True
            elif (kind, val) == ("op", "*"):
                self.take()
                continue
            else:
                break
        if not saw_factor:
            tok = self.peek()
            pos = tok[2] if tok else len(self.text)
            raise LaurentParseError("empty term", pos)
        return (exp["x"], exp["y"]), coeff

    def _signed_int(self) -> int:
        sign = 1
        tok = self.take()
        while tok[0] == "op" and tok[1] == "-":
            sign = -sign
            tok = self.take()
        if tok[0] != "num":
            raise LaurentParseError("exponent expected", tok[2])
        return sign * tok[1]


def parse_laurent(text: str) -> dict[tuple[int, int], int]:
    """Parse to exponent -> coefficient; raises LaurentParseError."""
    return _Parser(text).parse()
