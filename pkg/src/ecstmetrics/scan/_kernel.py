"""Pure-Python scanning kernel.

The hot loop of the whole engine: classifies raw characters into token
stretches. Emits (code, start, end, line, col, end_line, end_col)
tuples, where start/end are half-open string offsets and the remaining
fields are 1-based inclusive source positions.

The compiled twin in _kernel_c.pyx must stay behaviourally identical;
tests compare both token-for-token, including error positions.
"""

from ..errors import ScanError

WORD = 0
NUMBER = 1
STRING = 2
SYMBOL = 3
COMMENT = 4


def scan(
    text,
    line_comment,
    block_open,
    block_close,
    nested_blocks,
    two_char_ops,
    single_chars,
    string_escapes,
):
    """Tokenize text into raw stretches.

    line_comment/block_open/block_close are comment delimiters ("" when
    the language has none), two_char_ops a set of two-character operator
    spellings, single_chars a string of acceptable one-character
    symbols.  Newlines must already be normalized to "\\n".
    """
    out = []
    i = 0
    n = len(text)
    line = 1
    col = 1
    lc_len = len(line_comment)
    bo_len = len(block_open)
    bc_len = len(block_close)
    while i < n:
        c = text[i]
        if c == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if c == " " or c == "\t" or c == "\r":
            i += 1
            col += 1
            continue
        if lc_len and c == line_comment[0] and text.startswith(line_comment, i):
            j = i + lc_len
            while j < n and text[j] != "\n":
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
                elif text[j] == "\n":
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
        if ("a" <= c <= "z") or ("A" <= c <= "Z") or c == "_":
            j = i + 1
            while j < n:
                c2 = text[j]
                if (
                    ("a" <= c2 <= "z")
                    or ("A" <= c2 <= "Z")
                    or ("0" <= c2 <= "9")
                    or c2 == "_"
                ):
                    j += 1
                else:
                    break
            out.append((WORD, i, j, line, col, line, col + (j - i) - 1))
            col += j - i
            i = j
            continue
        if "0" <= c <= "9":
            j = i + 1
            while j < n and "0" <= text[j] <= "9":
                j += 1
            # decimal point only when a digit follows; keeps ".." a symbol
            if j + 1 < n and text[j] == "." and "0" <= text[j + 1] <= "9":
                j += 2
                while j < n and "0" <= text[j] <= "9":
                    j += 1
            out.append((NUMBER, i, j, line, col, line, col + (j - i) - 1))
            col += j - i
            i = j
            continue
        if c == '"' or c == "'":
            j = i + 1
            closed = False
            while j < n:
                c2 = text[j]
                if c2 == c:
                    j += 1
                    closed = True
                    break
                if c2 == "\n":
                    break
                if string_escapes and c2 == "\\" and j + 1 < n and text[j + 1] != "\n":
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
        raise ScanError(f"unrecognized character {c!r}", line, col)
    return out
