"""Exact computations for the metaplectic cover of Sp(2n) and odd orthogonal groups over Q_v."""
