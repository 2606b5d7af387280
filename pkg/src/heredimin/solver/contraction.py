"""
The contracted system (V', f', I') of the solver, kept as a partition of
the original ground set.

Every current element is identified by the original index of its
representative, and owns a block X_v of original elements. Contracted
values and memberships are never materialized: a query on current
elements expands the blocks and asks the original oracles.
"""

import logging
from typing import Dict, Iterable, List, Optional

from ..config import get_config
from ..core.errors import ContractionError, InfeasibleError, InvariantError
from ..core.oracles import SetFamilyOracle, SetFunctionOracle
from ..core.subsets import GroundSet, Subset
from ..core.values import Value

logger = logging.getLogger(__name__)


class ContractedSystem:
    """
    Mutable solver state over a set function and a hereditary family.

    Args:
        f: Value oracle over the original ground set
        family: Membership oracle over the same ground set
        check_invariants: Re-check the partition after every mutation.
            Defaults to the "solver.check_invariants" setting.
    """

    def __init__(
        self,
        f: SetFunctionOracle,
        family: SetFamilyOracle,
        check_invariants: Optional[bool] = None,
    ):
        if f.universe.n != family.universe.n:
            raise ContractionError(
                f"Function over {f.universe.n} elements and family over "
                f"{family.universe.n} elements"
            )
        self.universe: GroundSet = f.universe
        self.f = f
        self.family = family
        self.blocks: Dict[int, int] = {v: 1 << v for v in range(self.universe.n)}
        self.active: List[int] = list(range(self.universe.n))
        self.s: Optional[int] = None
        # Once set, no set containing s is a member of the contracted family.
        self.s_forced_loop = False
        self.merges = 0
        if check_invariants is None:
            check_invariants = get_config().check_invariants()
        self.check_invariants = check_invariants

    def elements(self) -> List[int]:
        """Current elements in increasing id order, s included when present."""
        if self.s is None:
            return list(self.active)
        return sorted(self.active + [self.s])

    def block(self, v: int) -> int:
        """Bitmask of X_v."""
        try:
            return self.blocks[v]
        except KeyError:
            raise ContractionError(f"{v} is not a current element") from None

    def expand_mask(self, elements: Iterable[int]) -> int:
        mask = 0
        for v in elements:
            mask |= self.block(v)
        return mask

    def expand(self, elements: Iterable[int]) -> Subset:
        """X_A, the union of the blocks of A."""
        return Subset(self.universe.n, self.expand_mask(elements))

    def evaluate(self, elements: Iterable[int]) -> Value:
        """f'(A) = f(X_A); exactly one underlying evaluation."""
        return self.f.evaluate_mask(self.expand_mask(elements))

    def evaluate_mask(self, members: int) -> Value:
        """Evaluate a union of blocks given directly as an original bitmask."""
        return self.f.evaluate_mask(members)

    def member_mask(self, members: int) -> bool:
        if self.s_forced_loop and members & self.blocks[self.s]:
            return False
        return self.family.contains_mask(members)

    def member(self, elements: Iterable[int]) -> bool:
        """A in I' iff X_A in I (and A avoids s once s is forced to be a loop)."""
        return self.member_mask(self.expand_mask(elements))

    def is_loop(self, v: int) -> bool:
        return not self.member_mask(self.block(v))

    def contract_into(self, elements: Iterable[int], target: int) -> None:
        """Merge the blocks of ``elements`` into the block of ``target``."""
        merged = list(dict.fromkeys(elements))
        if not merged:
            raise ContractionError("Cannot contract an empty set")
        if target not in merged:
            raise ContractionError(f"Target {target} is not among {merged}")
        for v in merged:
            self.block(v)
        if self.s is not None and self.s in merged and target != self.s:
            raise ContractionError("Contractions involving s must go into s")

        for v in merged:
            if v == target:
                continue
            self.blocks[target] |= self.blocks.pop(v)
            self.active.remove(v)
        if len(merged) > 1:
            self.merges += 1
        logger.debug(f"Contracted {merged} into {target}")
        self._check()

    def absorb(self, elements: Iterable[int], force_loop: bool = False) -> None:
        """
        Contract active elements into s, creating s from the smallest of
        them if it does not exist yet.
        """
        absorbed = sorted(set(elements))
        if force_loop:
            self.s_forced_loop = True
        if not absorbed:
            return
        if self.s is None:
            self.s = absorbed[0]
            self.active.remove(self.s)
            logger.debug(f"Element {self.s} becomes the distinguished loop s")
        self.contract_into([self.s] + absorbed, self.s)

    def absorb_loops(self) -> List[int]:
        """
        Contract every active loop into s.

        Returns:
            The absorbed elements

        Raises:
            InfeasibleError: Every element is a loop before any merge
            ContractionError: There is no loop and no s to keep
        """
        loops = [v for v in self.active if self.is_loop(v)]
        if self.s is None:
            if not loops:
                raise ContractionError("No loop to absorb")
            if self.merges == 0 and len(loops) == len(self.active):
                raise InfeasibleError(
                    "Every element is a loop: no nonempty set belongs to the family"
                )
        self.absorb(loops)
        return loops

    def _check(self) -> None:
        if not self.check_invariants:
            return
        expected = set(self.active)
        if self.s is not None:
            if self.s in expected:
                raise InvariantError("s is listed among the active elements")
            expected.add(self.s)
        if set(self.blocks) != expected:
            raise InvariantError("Blocks do not match the current elements")
        seen = 0
        for v, block in self.blocks.items():
            if not block:
                raise InvariantError(f"Block of {v} is empty")
            if block & seen:
                raise InvariantError(f"Block of {v} overlaps another block")
            seen |= block
        if seen != self.universe.full_mask:
            raise InvariantError("Blocks do not cover the ground set")

    def __repr__(self) -> str:
        return f"ContractedSystem(active={self.active}, s={self.s})"
