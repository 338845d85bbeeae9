"""Reference implementation of an abstract answer-set language.

Pipeline: parse -> desugar -> translate over a finite universe -> solve.
See the README for the language and the CLI/service interfaces.
"""

__version__ = "0.1.0"
