# coding: utf-8
"""
Uniform sphere sampling of principal stress triples and Monte Carlo averages of ``sigma_rel``.
"""
# region Imports
from __future__ import annotations
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from ..cfg.config import Config
from ..events.args.mc_args import McArgs, McCancelArgs
from ..events.event_singleton import _Events
from ..events.named_event import McNamedEvent
from ..exceptions import ex as mEx
from ..reduction.constrained import Constrained, KktRule
from ..reduction.reduction_mode import ReductionMode
from ..reduction.unconstrained import Unconstrained
from ..utils.type_var import Triple

# endregion Imports

_SEED_LIMIT = 2**64


class InfeasiblePolicy(str, Enum):
    """How samples without an admissible field enter the mean"""

    COUNT_AS_ONE = "count-as-one"
    """Sample contributes ``sigma_rel = 1`` (field switched off)"""
    EXCLUDE = "exclude"
    """Sample is left out of the mean"""

    def __str__(self) -> str:
        return self.value


class SphereSample(NamedTuple):
    theta: float
    """Polar angle ``[0, π]``"""
    phi: float
    """Azimuthal angle ``[0, 2π)``"""

    @property
    def lambdas(self) -> Triple:
        """Unit radius eigenvalue triple ``(sinθ cosφ, sinθ sinφ, cosθ)``"""
        st = math.sin(self.theta)
        return (st * math.cos(self.phi), st * math.sin(self.phi), math.cos(self.theta))


@dataclass(frozen=True)
class McEstimate:
    """Monte Carlo mean of ``sigma_rel``"""

    mean: float
    n: int
    """Requested sample count"""
    seed: int
    infeasible_policy: InfeasiblePolicy
    n_infeasible: int
    std_error: float
    """Standard error of the mean over the samples that entered it"""
    mode: ReductionMode
    rule: KktRule
    generator: str
    n_shards: int

    @property
    def n_used(self) -> int:
        """Samples that entered the mean"""
        if self.infeasible_policy == InfeasiblePolicy.EXCLUDE:
            return self.n - self.n_infeasible
        return self.n

    @property
    def infeasible_fraction(self) -> float:
        return self.n_infeasible / self.n


class AngularMapRow(NamedTuple):
    theta: float
    phi: float
    sigma_rel: Optional[float]
    """``None`` inside the region without an admissible field"""
    feasible: bool


class _ShardSums(NamedTuple):
    total: float
    total_sq: float
    n_used: int
    n_infeasible: int


class MonteCarlo:
    """Sphere sampling and Monte Carlo estimation"""

    # region generators
    @staticmethod
    def _check_seed(seed: int) -> int:
        seed = int(seed)
        if not 0 <= seed < _SEED_LIMIT:
            raise ValueError(f"seed must be an unsigned 64 bit integer, got {seed}")
        return seed

    @staticmethod
    def shard_sizes(n: int, shard_size: int | None = None) -> List[int]:
        """
        Splits ``n`` samples into shards.

        Args:
            n (int): sample count
            shard_size (int, optional): Defaults to ``Config().mc_shard_size``.

        Returns:
            List[int]: sizes, every shard full but the last
        """
        size = Config().mc_shard_size if shard_size is None else int(shard_size)
        full, rest = divmod(n, size)
        return [size] * full + ([rest] if rest else [])

    @staticmethod
    def shard_generators(seed: int, n_shards: int) -> List[np.random.Generator]:
        """
        Gets one independent generator per shard.

        Substreams are spawned from ``SeedSequence(seed)`` so shard ``k`` draws the same numbers
        regardless of the number of workers.

        Args:
            seed (int): root seed
            n_shards (int): number of shards

        Returns:
            List[np.random.Generator]: generators in shard order
        """
        bit_gen = getattr(np.random, Config().mc_generator)
        return [np.random.Generator(bit_gen(child)) for child in np.random.SeedSequence(seed).spawn(n_shards)]

    @staticmethod
    def draw_angles(rng: np.random.Generator, count: int) -> Tuple[np.ndarray, np.ndarray]:
        """
        Draws uniformly distributed sphere angles.

        ``φ = 2π U`` and ``θ = arccos(1 - 2U)``.

        Returns:
            Tuple[np.ndarray, np.ndarray]: ``(theta, phi)``
        """
        phi = 2.0 * math.pi * rng.random(count)
        theta = np.arccos(1.0 - 2.0 * rng.random(count))
        return theta, phi

    @classmethod
    def sample_sphere(cls, n: int, seed: int) -> Iterator[SphereSample]:
        """
        Yields ``n`` uniformly distributed points of the unit sphere.

        The stream is the one ``mc_mean`` evaluates for the same ``seed``.

        Args:
            n (int): sample count, ``>= 1``
            seed (int): unsigned 64 bit seed

        Raises:
            ValueError: If ``n < 1`` or ``seed`` is out of range.

        Yields:
            SphereSample: sample
        """
        if n < 1:
            raise ValueError(f"n must be at least 1, got {n}")
        seed = cls._check_seed(seed)
        sizes = cls.shard_sizes(n)
        for rng, count in zip(cls.shard_generators(seed, len(sizes)), sizes):
            theta, phi = cls.draw_angles(rng, count)
            for t, p in zip(theta, phi):
                yield SphereSample(float(t), float(p))

    # endregion generators

    # region evaluation
    @staticmethod
    def default_policy(mode: ReductionMode) -> InfeasiblePolicy:
        """``COUNT_AS_ONE`` for the unconstrained problem, ``EXCLUDE`` for the sign constrained ones"""
        if ReductionMode(mode) == ReductionMode.UNCONSTRAINED:
            return InfeasiblePolicy.COUNT_AS_ONE
        return InfeasiblePolicy.EXCLUDE

    @staticmethod
    def _check_mode(mode: ReductionMode) -> ReductionMode:
        mode = ReductionMode(mode)
        if mode == ReductionMode.PLANE:
            raise ValueError("Sphere sampling covers the 3-D problems only, use PlaneStress for plane stress")
        return mode

    @staticmethod
    def sigma_rel_at(mode: ReductionMode, lambdas: Sequence[float], rule: KktRule = KktRule.LITERAL) -> Optional[float]:
        """
        Gets ``sigma_rel`` of the diagonal tensor ``diag(lambdas)``.

        Args:
            mode (ReductionMode): ``UNCONSTRAINED``, ``TENSILE`` or ``COMPRESSIVE``
            lambdas (Sequence[float]): eigenvalues in any order
            rule (KktRule, optional): constrained rule. Defaults to ``KktRule.LITERAL``.

        Returns:
            float | None: ``sigma_rel`` or ``None`` without an admissible field
        """
        if mode == ReductionMode.UNCONSTRAINED:
            return Unconstrained.principal_sigma_rel(lambdas)
        return Constrained.principal_sigma_rel(lambdas, mode, rule)

    @classmethod
    def _run_shard(
        cls,
        mode: ReductionMode,
        rule: KktRule,
        policy: InfeasiblePolicy,
        rng: np.random.Generator,
        count: int,
        radius: float,
    ) -> _ShardSums:
        theta, phi = cls.draw_angles(rng, count)
        st = np.sin(theta)
        lams = radius * np.column_stack((st * np.cos(phi), st * np.sin(phi), np.cos(theta)))
        total = 0.0
        total_sq = 0.0
        used = 0
        infeasible = 0
        for row in lams:
            val = cls.sigma_rel_at(mode, (float(row[0]), float(row[1]), float(row[2])), rule)
            if val is None:
                infeasible += 1
                if policy == InfeasiblePolicy.EXCLUDE:
                    continue
                val = 1.0
            total += val
            total_sq += val * val
            used += 1
        return _ShardSums(total, total_sq, used, infeasible)

    @classmethod
    def mc_mean(
        cls,
        mode: ReductionMode,
        n: int | None = None,
        seed: int = 0,
        policy: InfeasiblePolicy | None = None,
        rule: KktRule = KktRule.LITERAL,
        workers: int = 1,
        radius: float = 1.0,
    ) -> McEstimate:
        """
        Estimates the mean ``sigma_rel`` over uniformly oriented principal triples.

        Each sample ``diag(λ1, λ2, λ3)`` is solved in closed form. Shards are evaluated in
        order, or on a thread pool when ``workers > 1``, and always merged in shard order.

        Args:
            mode (ReductionMode): ``UNCONSTRAINED``, ``TENSILE`` or ``COMPRESSIVE``
            n (int, optional): sample count. Defaults to ``Config().mc_samples``.
            seed (int, optional): unsigned 64 bit seed. Defaults to ``0``.
            policy (InfeasiblePolicy, optional): Defaults to :py:meth:`default_policy`.
            rule (KktRule, optional): constrained rule. Defaults to ``KktRule.LITERAL``.
            workers (int, optional): worker threads. Defaults to ``1``.
            radius (float, optional): sphere radius. Defaults to ``1.0``.

        Raises:
            ValueError: If ``n < 1``, ``workers < 1``, ``radius <= 0``, the seed is out of range
                or ``mode`` is ``PLANE``.
            CancelEventError: If ``MC_STARTING`` is canceled.
            StressShieldError: If every sample is excluded.

        Returns:
            McEstimate: estimate

        Note:
            ``McCancelArgs`` are raised on ``McNamedEvent.MC_STARTING``, ``McArgs`` on
            ``McNamedEvent.MC_SHARD_DONE`` for each merged shard and on ``McNamedEvent.MC_DONE``.
        """
        mode = cls._check_mode(mode)
        n = Config().mc_samples if n is None else int(n)
        if n < 1:
            raise ValueError(f"n must be at least 1, got {n}")
        if workers < 1:
            raise ValueError(f"workers must be at least 1, got {workers}")
        if not (math.isfinite(radius) and radius > 0.0):
            raise ValueError(f"radius must be positive, got {radius}")
        seed = cls._check_seed(seed)
        policy = cls.default_policy(mode) if policy is None else InfeasiblePolicy(policy)

        source = cls.mc_mean.__qualname__
        cargs = McCancelArgs(source, mode=str(mode.value), n=n, seed=seed)
        _Events().trigger(McNamedEvent.MC_STARTING, cargs)
        if cargs.cancel:
            raise mEx.CancelEventError(cargs)

        sizes = cls.shard_sizes(n)
        gens = cls.shard_generators(seed, len(sizes))
        jobs = list(zip(gens, sizes))
        if workers == 1:
            results = (cls._run_shard(mode, rule, policy, g, c, radius) for g, c in jobs)
            sums = cls._merge(results, source, mode, n, seed)
        else:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                futures = [pool.submit(cls._run_shard, mode, rule, policy, g, c, radius) for g, c in jobs]
                sums = cls._merge((f.result() for f in futures), source, mode, n, seed)

        if sums.n_used == 0:
            raise mEx.StressShieldError(f"Every one of {n} samples was excluded as infeasible")
        mean = sums.total / sums.n_used
        if sums.n_used > 1:
            var = max(0.0, (sums.total_sq - sums.n_used * mean * mean) / (sums.n_used - 1))
            std_error = math.sqrt(var / sums.n_used)
        else:
            std_error = 0.0

        est = McEstimate(
            mean=mean,
            n=n,
            seed=seed,
            infeasible_policy=policy,
            n_infeasible=sums.n_infeasible,
            std_error=std_error,
            mode=mode,
            rule=rule,
            generator=Config().mc_generator,
            n_shards=len(sizes),
        )
        dargs = McArgs(source, mode=str(mode.value), n=n, seed=seed)
        dargs.estimate = est
        _Events().trigger(McNamedEvent.MC_DONE, dargs)
        return est

    @staticmethod
    def _merge(results, source: str, mode: ReductionMode, n: int, seed: int) -> _ShardSums:
        total = 0.0
        total_sq = 0.0
        used = 0
        infeasible = 0
        for i, res in enumerate(results):
            total += res.total
            total_sq += res.total_sq
            used += res.n_used
            infeasible += res.n_infeasible
            sargs = McArgs(source, mode=str(mode.value), n=n, seed=seed)
            sargs.shard = i
            _Events().trigger(McNamedEvent.MC_SHARD_DONE, sargs)
        return _ShardSums(total, total_sq, used, infeasible)

    @classmethod
    def infeasible_fraction(cls, mode: ReductionMode, n: int, seed: int, rule: KktRule = KktRule.LITERAL) -> float:
        """
        Gets the fraction of sphere samples without an admissible field.

        Args:
            mode (ReductionMode): ``UNCONSTRAINED``, ``TENSILE`` or ``COMPRESSIVE``
            n (int): sample count
            seed (int): seed
            rule (KktRule, optional): Defaults to ``KktRule.LITERAL``.

        Returns:
            float: fraction in ``[0, 1]``
        """
        mode = cls._check_mode(mode)
        count = 0
        total = 0
        for sample in cls.sample_sphere(n, seed):
            total += 1
            if cls.sigma_rel_at(mode, sample.lambdas, rule) is None:
                count += 1
        return count / total

    # endregion evaluation

    # region maps
    @classmethod
    def angular_map(
        cls, mode: ReductionMode, theta_steps: int, phi_steps: int, rule: KktRule = KktRule.LITERAL
    ) -> List[AngularMapRow]:
        """
        Evaluates ``sigma_rel`` on a regular ``(θ, φ)`` grid at unit radius.

        ``θ`` spans ``[0, π]`` and ``φ`` spans ``[0, 2π]``, both endpoints included; ``θ`` is the
        outer loop.

        Args:
            mode (ReductionMode): ``UNCONSTRAINED``, ``TENSILE`` or ``COMPRESSIVE``
            theta_steps (int): polar steps, ``>= 2``
            phi_steps (int): azimuthal steps, ``>= 2``
            rule (KktRule, optional): Defaults to ``KktRule.LITERAL``.

        Raises:
            ValueError: If a step count is below ``2``.

        Returns:
            List[AngularMapRow]: rows, infeasible points flagged with ``feasible=False``
        """
        mode = cls._check_mode(mode)
        if theta_steps < 2 or phi_steps < 2:
            raise ValueError(f"steps must be at least 2, got {theta_steps}, {phi_steps}")
        rows: List[AngularMapRow] = []
        for theta in np.linspace(0.0, math.pi, theta_steps):
            for phi in np.linspace(0.0, 2.0 * math.pi, phi_steps):
                lams = SphereSample(float(theta), float(phi)).lambdas
                val = cls.sigma_rel_at(mode, lams, rule)
                rows.append(AngularMapRow(float(theta), float(phi), val, val is not None))
        args = McArgs(cls.angular_map.__qualname__, mode=str(mode.value), n=len(rows), seed=0)
        _Events().trigger(McNamedEvent.MAP_DONE, args)
        return rows

    # endregion maps
