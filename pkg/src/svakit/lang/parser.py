"""Recursive-descent parser for assertion units.

Binding strength, loosest to tightest: ``not``, ``or``/``and`` (property),
``|->``/``|=>``, ``until``, ``within``, ``##`` concatenation, repetition
suffixes, then the boolean operators. ``|->``/``|=>`` and ``until`` are
right-associative; the other binary operators associate left. A prefix
``not`` is also accepted at property operand positions (``a |-> not b``).

Layer checks are enforced during parsing: implication antecedents,
``within``/``##``/``[*`` operands must be sequences, and every boolean
operator and repetition of the ``[->``/``[=`` form requires boolean
operands. Violations surface as diagnostics, not Python-level type errors.
"""

from __future__ import annotations

from .ast import SYS_FUNCS, AssertionUnit, AstNode, Kind, Layer
from .errors import Diagnostic, ParseError
from .lexer import Token, tokenize


def parse(text: str) -> AssertionUnit:
    """Parse one assertion unit; raises :class:`ParseError` on failure."""
    return _Parser(tokenize(text), text).parse_unit()


class _Parser:
    def __init__(self, tokens: list[Token], source: str):
        self.toks = tokens
        self.pos = 0
        self.source = source

    # -- token plumbing ----------------------------------------------------

    def peek(self, ahead: int = 0) -> Token:
        return self.toks[min(self.pos + ahead, len(self.toks) - 1)]

    def at(self, text: str) -> bool:
        tok = self.peek()
        return tok.kind in ("op", "kw") and tok.text == text

    def advance(self) -> Token:
        tok = self.toks[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def accept(self, text: str) -> Token | None:
        if self.at(text):
            return self.advance()
        return None

    def expect(self, text: str, message: str) -> Token:
        tok = self.accept(text)
        if tok is None:
            self.fail(message)
        return tok

    def fail(self, message: str, tok: Token | None = None, token_text: str | None = None):
        tok = tok or self.peek()
        if token_text is None:
            token_text = tok.text
        if tok.kind == "eof" and token_text == "":
            message = f"{message} at end of input" if "end of input" not in message else message
        raise ParseError([Diagnostic(tok.line, tok.col, message, token_text)])

    def unexpected(self):
        tok = self.peek()
        if tok.kind == "eof":
            self.fail("unexpected end of input")
        self.fail(f"unexpected token '{tok.text}'")

    # -- unit --------------------------------------------------------------

    def parse_unit(self) -> AssertionUnit:
        self.expect("@", "expected '@(' clock prefix")
        self.expect("(", "expected '(' after '@'")
        edge_tok = self.peek()
        if edge_tok.text in ("posedge", "negedge"):
            self.advance()
        else:
            self.fail("expected 'posedge' or 'negedge' in clock event")
        clk_tok = self.peek()
        if clk_tok.kind != "id":
            self.fail("expected clock signal identifier")
        self.advance()
        self.expect(")", "expected ')' to close the clock event")

        disable = None
        if self.accept("disable"):
            self.expect("iff", "expected 'iff' after 'disable'")
            self.expect("(", "expected '(' after 'disable iff'")
            disable = self.bool_or()
            self.expect(")", "expected ')' to close the disable condition")

        body = self.prop()
        if self.peek().kind != "eof":
            self.fail(f"unexpected trailing input '{self.peek().text}'")
        return AssertionUnit(
            edge=edge_tok.text, clock=clk_tok.text, body=body, disable=disable, source=self.source
        )

    # -- property layer ----------------------------------------------------

    def prop(self) -> AstNode:
        if self.accept("not"):
            return AstNode(Kind.PROP_NOT, (self.prop(),))
        return self.prop_or()

    def prop_operand(self, sub) -> AstNode:
        if self.accept("not"):
            return AstNode(Kind.PROP_NOT, (self.prop_operand(sub),))
        return sub()

    def prop_or(self) -> AstNode:
        node = self.prop_and()
        while self.accept("or"):
            node = AstNode(Kind.PROP_OR, (node, self.prop_operand(self.prop_and)))
        return node

    def prop_and(self) -> AstNode:
        node = self.impl()
        while self.accept("and"):
            node = AstNode(Kind.PROP_AND, (node, self.prop_operand(self.impl)))
        return node

    def impl(self) -> AstNode:
        left = self.until()
        for text, kind in (("|->", Kind.IMPL_OVERLAP), ("|=>", Kind.IMPL_NONOVERLAP)):
            if self.at(text):
                tok = self.advance()
                if left.layer == Layer.PROP:
                    self.fail(
                        f"left operand of '{text}' must be a sequence, not a property",
                        tok,
                        token_text=text,
                    )
                right = self.prop_operand(self.impl)
                return AstNode(kind, (left, right))
        return left

    def until(self) -> AstNode:
        left = self.within()
        if self.accept("until"):
            right = self.prop_operand(self.until)
            return AstNode(Kind.UNTIL, (left, right))
        return left

    # -- sequence layer ----------------------------------------------------

    def within(self) -> AstNode:
        node = self.concat()
        while self.at("within"):
            tok = self.advance()
            self._require_seq(node, "within", tok)
            right = self.concat()
            self._require_seq(right, "within", tok)
            node = AstNode(Kind.WITHIN, (node, right))
        return node

    def concat(self) -> AstNode:
        if self.at("##"):
            tok = self.advance()
            kind, bounds = self.delay_bounds(tok)
            node: AstNode = AstNode(kind, (self.repeat(),), bounds=bounds)
        else:
            node = self.repeat()
        while self.at("##"):
            tok = self.advance()
            self._require_seq(node, "##", tok)
            kind, bounds = self.delay_bounds(tok)
            right = self.repeat()
            self._require_seq(right, "##", tok)
            node = AstNode(kind, (node, right), bounds=bounds)
        return node

    def delay_bounds(self, hash_tok: Token) -> tuple[Kind, tuple[int, int | None]]:
        if self.peek().kind == "int":
            n = int(self.advance().text)
            return Kind.DELAY, (n, n)
        if self.accept("["):
            lo_tok = self.peek()
            if lo_tok.kind != "int":
                self.fail("expected lower delay bound")
            lo = int(self.advance().text)
            self.expect(":", "expected ':' in delay range")
            hi = self.range_upper("delay range")
            self.expect("]", "expected ']' to close delay range")
            if hi is not None and lo > hi:
                self.fail(
                    f"lower bound {lo} exceeds upper bound {hi} in delay range",
                    lo_tok,
                    token_text="##[",
                )
            return Kind.DELAY_RANGE, (lo, hi)
        self.fail("expected delay bound after '##'")

    def range_upper(self, what: str) -> int | None:
        if self.accept("$"):
            return None
        if self.peek().kind == "int":
            return int(self.advance().text)
        self.fail(f"expected upper bound or '$' in {what}")

    def repeat(self) -> AstNode:
        node = self.bool_or()
        while True:
            if self.at("[*"):
                tok = self.advance()
                self._require_seq(node, "[*", tok)
                if self.peek().kind != "int":
                    self.fail("expected repetition count after '[*'")
                lo = int(self.advance().text)
                hi: int | None = lo
                ranged = False
                if self.accept(":"):
                    ranged = True
                    hi = self.range_upper("repetition range")
                self.expect("]", "expected ']' to close repetition")
                if hi is not None and lo > hi:
                    self.fail(
                        f"lower bound {lo} exceeds upper bound {hi} in repetition range",
                        tok,
                        token_text="[*",
                    )
                kind = Kind.REPEAT_RANGE if ranged else Kind.REPEAT_CONSEC
                node = AstNode(kind, (node,), bounds=(lo, hi))
            elif self.at("[->") or self.at("[="):
                tok = self.advance()
                op = tok.text
                kind = Kind.REPEAT_GOTO if op == "[->" else Kind.REPEAT_NONCONSEC
                if node.layer != Layer.BOOL:
                    self.fail(
                        f"operand of '{op}' must be a boolean expression", tok, token_text=op
                    )
                if self.peek().kind != "int":
                    self.fail(f"expected repetition count after '{op}'")
                n = int(self.advance().text)
                self.expect("]", "expected ']' to close repetition")
                node = AstNode(kind, (node,), bounds=(n, n))
            else:
                return node

    # -- boolean layer -----------------------------------------------------

    def bool_or(self) -> AstNode:
        node = self.bool_and()
        while self.at("||"):
            tok = self.advance()
            self._require_bool(node, "||", tok)
            right = self.bool_and()
            self._require_bool(right, "||", tok)
            node = AstNode(Kind.OR, (node, right))
        return node

    def bool_and(self) -> AstNode:
        node = self.bool_rel()
        while self.at("&&"):
            tok = self.advance()
            self._require_bool(node, "&&", tok)
            right = self.bool_rel()
            self._require_bool(right, "&&", tok)
            node = AstNode(Kind.AND, (node, right))
        return node

    def bool_rel(self) -> AstNode:
        node = self.bool_not()
        while self.at("==") or self.at("!="):
            tok = self.advance()
            self._require_bool(node, tok.text, tok)
            right = self.bool_not()
            self._require_bool(right, tok.text, tok)
            node = AstNode(Kind.REL_OP, (node, right), op=tok.text)
        return node

    def bool_not(self) -> AstNode:
        if self.at("!"):
            tok = self.advance()
            child = self.bool_not()
            self._require_bool(child, "!", tok)
            return AstNode(Kind.NOT, (child,))
        return self.primary()

    def primary(self) -> AstNode:
        tok = self.peek()
        if tok.kind == "id":
            self.advance()
            return AstNode(Kind.ATOM, name=tok.text)
        if tok.kind == "sysfunc":
            return self.sys_func_call()
        if self.at("("):
            return self.parenthesized()
        self.unexpected()

    def sys_func_call(self) -> AstNode:
        tok = self.advance()
        func = tok.text
        if func not in SYS_FUNCS:
            self.fail(f"unknown system function '{func}'", tok)
        self.expect("(", f"expected '(' after {func}")
        arg_tok = self.peek()
        if arg_tok.kind != "id":
            self.fail(f"expected a signal identifier as the argument of {func}", arg_tok)
        self.advance()
        depth = None
        if self.accept(","):
            if func != "$past":
                self.fail(f"{func} expects exactly one argument", tok, token_text=func)
            if self.peek().kind != "int":
                self.fail("expected cycle count after ',' in $past(...)")
            depth = int(self.advance().text)
            if depth < 1:
                self.fail("$past cycle count must be at least 1", tok, token_text="$past")
        self.expect(")", f"expected ')' to close {func}(...)")
        bounds = (depth, depth) if depth is not None else None
        return AstNode(Kind.SYS_FUNC, name=arg_tok.text, func=func, bounds=bounds)

    def parenthesized(self) -> AstNode:
        open_tok = self.advance()
        if self.at("var"):
            return self.local_var_decl(open_tok)
        inner = self.prop()
        if self.at(","):
            return self.local_var_assign(inner, open_tok)
        self.expect(")", "expected ')' to close the group")
        return inner

    def local_var_decl(self, open_tok: Token) -> AstNode:
        self.advance()  # 'var'
        name_tok = self.peek()
        if name_tok.kind != "id":
            self.fail("expected local variable name after 'var'")
        self.advance()
        self.expect("=", "expected '=' after local variable name")
        init = self.bool_or()
        self._require_bool(init, "=", open_tok)
        self.expect(")", "expected ')' to close local variable declaration")
        return AstNode(Kind.LOCAL_VAR_DECL, (init,), name=name_tok.text)

    def local_var_assign(self, seq: AstNode, open_tok: Token) -> AstNode:
        comma = self.advance()
        self._require_seq(seq, ",", comma)
        name_tok = self.peek()
        if name_tok.kind != "id":
            self.fail("expected local variable name after ','")
        self.advance()
        self.expect("=", "expected '=' after local variable name")
        value = self.bool_or()
        self._require_bool(value, "=", comma)
        self.expect(")", "expected ')' to close local variable assignment")
        return AstNode(Kind.LOCAL_VAR_ASSIGN, (seq, value), name=name_tok.text)

    # -- layer checks --------------------------------------------------------

    def _require_seq(self, node: AstNode, op: str, tok: Token) -> None:
        if node.layer == Layer.PROP:
            if op == ",":
                self.fail(
                    "left part of a local variable assignment must be a sequence",
                    tok,
                    token_text=",",
                )
            self.fail(
                f"operand of '{op}' must be a sequence, not a property", tok, token_text=op
            )

    def _require_bool(self, node: AstNode, op: str, tok: Token) -> None:
        if node.layer != Layer.BOOL:
            found = "property" if node.layer == Layer.PROP else "sequence"
            self.fail(
                f"cannot convert a {found} to the boolean operand of '{op}'",
                tok,
                token_text=op,
            )
