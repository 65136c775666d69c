"""Finitely presented symmetric monoidal categories: tensor, internal hom, coherence."""
