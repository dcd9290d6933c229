# cython: language_level=3, boundscheck=False
"""Compiled scanning kernel; behaviourally identical to _kernel.py.

Typed counters and character reads make the per-character loop cheap;
everything rare (token construction, errors) stays plain Python.
"""

from ..errors import ScanError

WORD = 0
NUMBER = 1
STRING = 2
SYMBOL = 3
COMMENT = 4


def scan(
    str text,
    str line_comment,
    str block_open,
    str block_close,
    bint nested_blocks,
    two_char_ops,
    str single_chars,
    bint string_escapes,
):
    """Tokenize text into raw stretches; see _kernel.scan."""
    cdef list out = []
    cdef Py_ssize_t i = 0
    cdef Py_ssize_t n = len(text)
    cdef Py_ssize_t j
    cdef int line = 1
    cdef int col = 1
    cdef int start_line, start_col, cur_line, cur_col, depth
    cdef Py_ssize_t lc_len = len(line_comment)
    cdef Py_ssize_t bo_len = len(block_open)
    cdef Py_ssize_t bc_len = len(block_close)
    cdef Py_UCS4 c, c2
    cdef bint closed
    while i < n:
        c = text[i]
        if c == u"\n":
            i += 1
            line += 1
            col = 1
            continue
        if c == u" " or c == u"\t" or c == u"\r":
            i += 1
            col += 1
            continue
        if lc_len and c == line_comment[0] and text.startswith(line_comment, i):
            j = i + lc_len
            while j < n and text[j] != u"\n":
                j += 1
            out.append((COMMENT, i, j, line, col, line, col + (j - i) - 1))
            col += j - i
            i = j
            continue
        if bo_len and c == block_open[0] and text.startswith(block_open, i):
            start_line = line
            start_col = col
            depth = 1
            j = i + bo_len
            cur_line = line
            cur_col = col + bo_len
            closed = False
            while j < n:
                if text.startswith(block_close, j):
                    depth -= 1
                    j += bc_len
                    cur_col += bc_len
                    if depth == 0:
                        closed = True
                        break
                elif nested_blocks and text.startswith(block_open, j):
                    depth += 1
                    j += bo_len
                    cur_col += bo_len
                elif text[j] == u"\n":
                    j += 1
                    cur_line += 1
                    cur_col = 1
                else:
                    j += 1
                    cur_col += 1
            if not closed:
                raise ScanError("unterminated block comment", start_line, start_col)
            out.append((COMMENT, i, j, start_line, start_col, cur_line, cur_col - 1))
            i = j
            line = cur_line
            col = cur_col
            continue
        if (u"a" <= c <= u"z") or (u"A" <= c <= u"Z") or c == u"_":
            j = i + 1
            while j < n:
                c2 = text[j]
                if (
                    (u"a" <= c2 <= u"z")
                    or (u"A" <= c2 <= u"Z")
                    or (u"0" <= c2 <= u"9")
                    or c2 == u"_"
                ):
                    j += 1
                else:
                    break
            out.append((WORD, i, j, line, col, line, col + (j - i) - 1))
            col += j - i
            i = j
            continue
        if u"0" <= c <= u"9":
            j = i + 1
            while j < n and u"0" <= text[j] <= u"9":
                j += 1
            # decimal point only when a digit follows; keeps ".." a symbol
            if j + 1 < n and text[j] == u"." and u"0" <= text[j + 1] <= u"9":
                j += 2
                while j < n and u"0" <= text[j] <= u"9":
                    j += 1
            out.append((NUMBER, i, j, line, col, line, col + (j - i) - 1))
            col += j - i
            i = j
            continue
        if c == u'"' or c == u"'":
            j = i + 1
            closed = False
            while j < n:
                c2 = text[j]
                if c2 == c:
                    j += 1
                    closed = True
                    break
                if c2 == u"\n":
                    break
                if string_escapes and c2 == u"\\" and j + 1 < n and text[j + 1] != u"\n":
                    j += 2
                    continue
                j += 1
            if not closed:
                raise ScanError("unterminated string literal", line, col)
            out.append((STRING, i, j, line, col, line, col + (j - i) - 1))
            col += j - i
            i = j
            continue
        if i + 1 < n and text[i : i + 2] in two_char_ops:
            out.append((SYMBOL, i, i + 2, line, col, line, col + 1))
            col += 2
            i += 2
            continue
        if c in single_chars:
            out.append((SYMBOL, i, i + 1, line, col, line, col))
            col += 1
            i += 1
            continue
        raise ScanError(f"unrecognized character {chr(c)!r}", line, col)
    return out
