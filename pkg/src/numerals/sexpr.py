"""Small s-expression reader shared by the formula codes and descriptor texts.

Nodes are plain python values: a list for a parenthesized group, a str for an
atom, and a QuotedString for a double-quoted literal. Every node remembers the
character offset it started at so error messages can point somewhere useful.
"""


class SexprError(Exception):
    def __init__(self, message, position):
        super().__init__("%s (at offset %d)" % (message, position))
        self.position = position


class QuotedString(str):
    """A string that came from a double-quoted token."""

    def __new__(cls, value, position=0):
        obj = str.__new__(cls, value)
        obj.position = position
        return obj


class Group(list):
    """A parenthesized list of nodes."""

    def __init__(self, items, position=0):
        super().__init__(items)
        self.position = position


class Atom(str):
    def __new__(cls, value, position=0):
        obj = str.__new__(cls, value)
        obj.position = position
        return obj


_WHITESPACE = " \t\r\n"


def _read_string(text, i):
    # text[i] is the opening quote
    start = i
    i += 1
    out = []
    while i < len(text):
        c = text[i]
        if c == "\\":
            if i + 1 >= len(text):
                raise SexprError("dangling escape in string", i)
            nxt = text[i + 1]
            if nxt not in '"\\':
                raise SexprError("unknown escape \\%s" % nxt, i)
            out.append(nxt)
            i += 2
        elif c == '"':
            return QuotedString("".join(out), start), i + 1
        else:
            out.append(c)
            i += 1
    raise SexprError("unterminated string", start)


def _read_node(text, i):
    while i < len(text) and text[i] in _WHITESPACE:
        i += 1
    if i >= len(text):
        raise SexprError("unexpected end of input", i)
    c = text[i]
    if c == "(":
        start = i
        i += 1
        items = []
        while True:
            while i < len(text) and text[i] in _WHITESPACE:
                i += 1
            if i >= len(text):
                raise SexprError("unclosed '('", start)
            if text[i] == ")":
                return Group(items, start), i + 1
            node, i = _read_node(text, i)
            items.append(node)
    if c == ")":
        raise SexprError("unmatched ')'", i)
    if c == '"':
        return _read_string(text, i)
    start = i
    while i < len(text) and text[i] not in _WHITESPACE and text[i] not in '()"':
        i += 1
    return Atom(text[start:i], start), i


def read(text):
    """Parse exactly one s-expression; trailing garbage is an error."""
    node, i = _read_node(text, 0)
    while i < len(text) and text[i] in _WHITESPACE:
        i += 1
    if i != len(text):
        raise SexprError("trailing input after expression", i)
    return node


def quote(value):
    """Render a python string as a double-quoted token."""
    return '"' + value.replace("\\", "\\\\").replace('"', '\\"') + '"'
