"""
Computation caps shared by every enumeration in the algebra package.
"""

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Caps:
    """Upper bounds for exhaustive enumeration.

    Attributes:
        max_ring: Largest ring built from catalog or CLI selectors.
        max_module: Largest realized module, and the bound on |R|^m for
            user-facing free modules and presentations.
        kmax: Largest free rank tried when searching embeddings M -> R^k.
        max_free: Largest free cover R^k used internally to present a
            concretely given module.
        max_hom_candidates: Largest generator-image tuple space scanned for Hom.
        max_submodules: Largest submodule lattice enumerated.
        iso_limit: Largest ring size accepted by the isomorphism search.
        group_ring_hard: Absolute cap on |R|^|G|.
    """
    max_ring: int = 256
    max_module: int = 4096
    kmax: int = 3
    max_free: int = 65536
    max_hom_candidates: int = 1 << 20
    max_submodules: int = 20000
    iso_limit: int = 16
    group_ring_hard: int = 4096

    def __post_init__(self):
        for name in ('max_ring', 'max_module', 'kmax', 'max_free',
                     'max_hom_candidates', 'max_submodules', 'iso_limit', 'group_ring_hard'):
            if getattr(self, name) <= 0:
                raise ValueError(f"cap '{name}' must be positive, got {getattr(self, name)}")

    def with_overrides(self, **kwargs) -> 'Caps':
        """Return a copy with the given non-None fields replaced."""
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})


DEFAULT_CAPS = Caps()
