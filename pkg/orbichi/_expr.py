#!/usr/bin/env python

""" _expr.py: complex polynomial expressions in z and conj(z) (private).

Copyright (C) 2026  orbichi developers

This program is free software: you can redistribute it and/or modify it under
the terms of the GNU General Public License as published by the Free Software
Foundation, either version 3 of the License, or (at your option) any later
version.

Redistribution and use in source and binary forms, with or without
modifications, are permitted provided that the following conditions are met:
 o Redistributions of source code must retain the above copyright notice, this
   list of conditions and the following disclaimer.
 o Redistributions in binary form must reproduce the above copyright notice,
   this list of conditions and the following disclaimer in the documentation
   and/or other materials provided with the distribution.

Grammar:
 expr   := ['+'|'-'] term (('+'|'-') term)*
 term   := power ('*' power)*
 power  := atom ('^' integer >= 1)*
 atom   := 'z' | 'conj' '(' expr ')' | number ['i'] | 'i' | '(' expr ')'

A parsed expression evaluates on numpy complex arrays.

"""

__name__ = '_expr'
__license__ = 'GPL v3.0'
__version__ = '0.1.0'
__date__ = 'October 2026'
__author__ = 'orbichi developers'
__maintainer__ = 'orbichi developers'
__status__ = 'Development'

import re
import numpy as np

class error(ValueError):
    """ a syntax error at character offset """
    def __init__(self,msg,offset):
        ValueError.__init__(self,"{0} at offset {1}".format(msg,offset))
        self.offset = offset

_NUMBER_ = re.compile(r'\d+(\.\d*)?|\.\d+')
_INTEGER_ = re.compile(r'\d+')

class Expression(object):
    """ a parsed expression, call it with a complex array """
    def __init__(self,text,fn):
        self._text = text
        self._fn = fn

    def __repr__(self): return "Expression({0!r})".format(self._text)

    @property
    def text(self): return self._text

    def __call__(self,z):
        z = np.asarray(z,dtype=complex)
        return np.broadcast_to(self._fn(z),z.shape)

class _Parser(object):
    def __init__(self,text):
        self.s = text
        self.i = 0

    def skip(self):
        while self.i < len(self.s) and self.s[self.i].isspace(): self.i += 1

    def peek(self):
        self.skip()
        return self.s[self.i] if self.i < len(self.s) else ''

    def expect(self,tok):
        self.skip()
        if not self.s.startswith(tok,self.i): raise error("expected '{0}'".format(tok),self.i)
        self.i += len(tok)

    def expr(self):
        neg = False
        if self.peek() in ('+','-'):
            neg = self.peek() == '-'
            self.i += 1
        fn = self.term()
        if neg: fn = (lambda f:lambda z:-f(z))(fn)
        while self.peek() in ('+','-'):
            op = self.peek()
            self.i += 1
            a,b = fn,self.term()
            fn = (lambda a,b:lambda z:a(z)+b(z))(a,b) if op == '+' else \
                 (lambda a,b:lambda z:a(z)-b(z))(a,b)
        return fn

    def term(self):
        fn = self.power()
        while self.peek() == '*':
            self.i += 1
            a,b = fn,self.power()
            fn = (lambda a,b:lambda z:a(z)*b(z))(a,b)
        return fn

    def power(self):
        fn = self.atom()
        while self.peek() == '^':
            self.i += 1
            self.skip()
            m = _INTEGER_.match(self.s,self.i)
            if not m: raise error("expected a positive integer exponent",self.i)
            e = int(m.group())
            if e < 1: raise error("exponent must be >= 1",self.i)
            self.i = m.end()
            fn = (lambda f,e:lambda z:f(z)**e)(fn,e)
        return fn

    def atom(self):
        c = self.peek()
        if c == 'z':
            self.i += 1
            return lambda z:z
        if self.s.startswith('conj',self.i):
            self.i += 4
            self.expect('(')
            fn = self.expr()
            self.expect(')')
            return lambda z:np.conj(fn(z))
        if c == 'i':
            self.i += 1
            return lambda z:1j
        if c == '(':
            self.i += 1
            fn = self.expr()
            self.expect(')')
            return fn
        m = _NUMBER_.match(self.s,self.i)
        if m:
            v = float(m.group())
            self.i = m.end()
            if self.i < len(self.s) and self.s[self.i] == 'i':
                self.i += 1
                v = 1j*v
            return lambda z:v
        if not c: raise error("unexpected end of expression",self.i)
        raise error("unexpected '{0}'".format(c),self.i)

def parse(text):
    """
     :param text: the expression
     :returns: Expression
    """
    p = _Parser(text)
    fn = p.expr()
    if p.peek(): raise error("unexpected '{0}'".format(p.peek()),p.i)
    return Expression(text,fn)
