"""Recognizing the trivial group among 3-manifold groups (and hence the
3-sphere) from the dimension of the SL(2,C) representation variety."""

__version__ = "0.1.0"
