# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""Pixel observations."""

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from epicontrol.core.errors import RejectedInputError


@dataclass(frozen=True, eq=False)
class ObservationFrame:
    """
    A flattened pixel grid with values in [0, 1].

    Pixels are stored channel-major: pixels.reshape(channels, height, width)
    recovers the planes.
    """

    pixels: np.ndarray
    height: int
    width: int
    channels: int = 1

    def __post_init__(self):
        pixels = np.asarray(self.pixels, dtype=np.float64).ravel()
        object.__setattr__(self, "pixels", pixels)

        expected = self.height * self.width * self.channels
        if pixels.shape[0] != expected:
            raise RejectedInputError(
                "pixels",
                f"{pixels.shape[0]} values do not fill {self.channels}x{self.height}x{self.width}",
            )
        if not np.all((pixels >= 0.0) & (pixels <= 1.0)):
            raise RejectedInputError("pixels", "values must lie in [0, 1]")

    @property
    def dim(self) -> int:
        return self.pixels.shape[0]

    def planes(self) -> np.ndarray:
        """Pixels as a (channels, height, width) array."""
        return self.pixels.reshape(self.channels, self.height, self.width)

    def grayscale(self, intensities: Sequence[float]) -> "ObservationFrame":
        """
        Collapse planes to one channel: each pixel is the max over planes
        of plane value times that plane's intensity.
        """
        if len(intensities) != self.channels:
            raise RejectedInputError("intensities", f"need {self.channels} values, got {len(intensities)}")
        weights = np.asarray(intensities, dtype=np.float64)[:, None, None]
        gray = np.max(self.planes() * weights, axis=0)
        return ObservationFrame(pixels=np.clip(gray, 0.0, 1.0), height=self.height, width=self.width, channels=1)
