"""Loop Hecke algebras: normal forms, reduced-word bases, Dyck-path counts and the quantum gl(1|1) representation."""

from .algebra import Element, dimension, parse_element, reduced_words
from .coeff import Scalar
from .rewrite import normal_form

__all__ = ["Element", "Scalar", "dimension", "normal_form", "parse_element", "reduced_words"]
