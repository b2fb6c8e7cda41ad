from enum import Enum

import numpy as np

# RGB colors
WHITE = (255, 255, 255)
BLACK = (0, 0, 0)
LIGHTGREY = (211, 211, 211)
DARKBLUE = (31, 73, 125)


class VertexColor(Enum):
    WHITE = "white"
    BLACK = "black"

    @property
    def rgb(self):
        return WHITE if self is VertexColor.WHITE else BLACK

    @classmethod
    def parse(cls, text: str) -> "VertexColor":
        return cls(text.strip().lower())


# helper function to change opacity by rgb
def lighten_rgb(rgb, opacity, gamma=2.2):
    """
    Blends an RGB color with white in linear light.

    Parameters:
    - rgb: tuple of 3 ints (0–255)
    - opacity: float between 0 and 1, how much white to blend in
    - gamma: float, gamma value (default 2.2)

    Returns:
    - tuple of 3 ints (0–255)
    """
    linear = (np.asarray(rgb, dtype=float) / 255.0) ** gamma
    blended = linear * (1 - opacity) + opacity
    return tuple(int(c) for c in np.rint(blended ** (1 / gamma) * 255))


def to_hex(rgb) -> str:
    return "#{:02x}{:02x}{:02x}".format(*rgb)


BOUNDARY_FILL = lighten_rgb(LIGHTGREY, 0.5)
FROZEN_FACE = DARKBLUE
MUTABLE_FACE = lighten_rgb(DARKBLUE, 0.6)
