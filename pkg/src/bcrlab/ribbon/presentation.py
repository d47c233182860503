"""Ribbon presentations: disks, bands, and ordered signed piercings.

A presentation has p+1 disks indexed 0..p with disk 0 based, and p bands,
each attached between two disk boundaries and carrying an ordered list of
signed piercings through disk interiors.  The attachment graph on p+1 disks
with p bands must be connected (hence a tree), which is what makes the
associated surface a disk.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Piercing:
    disk: int
    sign: int  # +1 or -1


@dataclass(frozen=True)
class Band:
    from_disk: int
    to_disk: int
    piercings: tuple[Piercing, ...] = field(default=())


@dataclass(frozen=True)
class RibbonPresentation:
    disks: int  # count p+1; ids 0..p, disk 0 based
    bands: tuple[Band, ...] = field(default=())

    def validate(self) -> list[str]:
        errors = []
        if self.disks < 1:
            return ["a presentation needs at least the based disk"]
        if len(self.bands) != self.disks - 1:
            errors.append(
                f"{self.disks} disks need {self.disks - 1} bands, "
                f"got {len(self.bands)}"
            )
        for i, b in enumerate(self.bands):
            for end in (b.from_disk, b.to_disk):
                if not 0 <= end < self.disks:
                    errors.append(f"band {i} attaches to missing disk {end}")
            for j, pc in enumerate(b.piercings):
                if not 0 <= pc.disk < self.disks:
                    errors.append(f"band {i} piercing {j} references missing disk {pc.disk}")
                if pc.sign not in (1, -1):
                    errors.append(f"band {i} piercing {j} has sign {pc.sign}")
        if errors:
            return errors
        # attachment connectivity
        adj: dict[int, set[int]] = {d: set() for d in range(self.disks)}
        for b in self.bands:
            adj[b.from_disk].add(b.to_disk)
            adj[b.to_disk].add(b.from_disk)
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != self.disks:
            errors.append("disk-band attachment graph is not connected")
        return errors

    def is_valid(self) -> bool:
        return not self.validate()

    def crossings(self) -> list[tuple[int, int]]:
        """All (band index, piercing index) pairs."""
        return [
            (i, j) for i, b in enumerate(self.bands) for j in range(len(b.piercings))
        ]

    def to_json_dict(self) -> dict:
        return {
            "disks": self.disks,
            "based": 0,
            "bands": [
                {
                    "from": b.from_disk,
                    "to": b.to_disk,
                    "piercings": [{"disk": p.disk, "sign": p.sign} for p in b.piercings],
                }
                for b in self.bands
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "RibbonPresentation":
        if data.get("based", 0) != 0:
            raise ValueError("the based disk must be disk 0")
        bands = tuple(
            Band(
                b["from"],
                b["to"],
                tuple(Piercing(p["disk"], p["sign"]) for p in b.get("piercings", ())),
            )
            for b in data.get("bands", ())
        )
        return cls(int(data["disks"]), bands)


def trivial_presentation() -> RibbonPresentation:
    return RibbonPresentation(1, ())


def wheel_presentation(k: int) -> RibbonPresentation:
    """The cyclic wheel: band j hangs disk j off the base and pierces disk j-1.

    Indices cycle within 1..k, so band 1 pierces disk k; that wrap-around
    crossing approaches from the opposite side and carries sign -1, the
    choice under which the Alexander polynomial is exactly 1 + (t-1)^k.
    The associated chord diagram is the alternating wheel.
    """
    if k < 1:
        raise ValueError("wheel index must be at least 1")
    bands = []
    for j in range(1, k + 1):
        if j > 1:
            bands.append(Band(0, j, (Piercing(j - 1, 1),)))
        else:
            bands.append(Band(0, j, (Piercing(k, -1),)))
    return RibbonPresentation(k + 1, tuple(bands))


def unclasp(p: RibbonPresentation, crossing: tuple[int, int]) -> RibbonPresentation:
    """Delete one piercing (the combinatorial unclasping of that crossing)."""
    band_idx, pier_idx = crossing
    if not 0 <= band_idx < len(p.bands):
        raise ValueError(f"no band {band_idx}")
    band = p.bands[band_idx]
    if not 0 <= pier_idx < len(band.piercings):
        raise ValueError(f"band {band_idx} has no piercing {pier_idx}")
    new_piercings = band.piercings[:pier_idx] + band.piercings[pier_idx + 1 :]
    new_band = Band(band.from_disk, band.to_disk, new_piercings)
    bands = p.bands[:band_idx] + (new_band,) + p.bands[band_idx + 1 :]
    return RibbonPresentation(p.disks, bands)


def unclasp_all(p: RibbonPresentation, crossings) -> RibbonPresentation:
    """Unclasp several crossings; indices refer to the original presentation."""
    by_band: dict[int, list[int]] = {}
    for band_idx, pier_idx in crossings:
        by_band.setdefault(band_idx, []).append(pier_idx)
    result = p
    for band_idx, piers in by_band.items():
        for pier_idx in sorted(piers, reverse=True):
            result = unclasp(result, (band_idx, pier_idx))
    return result


def connected_sum(p1: RibbonPresentation, p2: RibbonPresentation) -> RibbonPresentation:
    """Merge along the based disks; p2's disk i>0 becomes disk p1.disks-1+i."""
    offset = p1.disks - 1

    def shift(d: int) -> int:
        return 0 if d == 0 else d + offset

    moved = tuple(
        Band(
            shift(b.from_disk),
            shift(b.to_disk),
            tuple(Piercing(shift(pc.disk), pc.sign) for pc in b.piercings),
        )
        for b in p2.bands
    )
    return RibbonPresentation(p1.disks + p2.disks - 1, p1.bands + moved)
