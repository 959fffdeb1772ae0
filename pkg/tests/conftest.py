"""Shared fixtures: photographic test images at native and 1024x768 sizes."""

import numpy as np
import pytest

_NATURAL_NAMES = ("camera", "moon", "coins", "page", "text", "clock")


@pytest.fixture(scope="session")
def natural_images():
    """Six grayscale photographs at their native sizes, uint8."""
    from skimage import data

    images = [np.asarray(getattr(data, name)(), dtype=np.uint8) for name in _NATURAL_NAMES]
    for image in images:
        assert image.ndim == 2
    return images


@pytest.fixture(scope="session")
def photos_1024x768():
    """Three grayscale photographs resampled to exactly 1024x768."""
    from scipy import ndimage
    from skimage import data

    out = []
    for name in ("moon", "page", "clock"):
        image = np.asarray(getattr(data, name)(), dtype=np.float64)
        zoom = (768 / image.shape[0], 1024 / image.shape[1])
        big = ndimage.zoom(image, zoom, order=3)
        big = np.clip(np.rint(big), 0, 255).astype(np.uint8)
        assert big.shape == (768, 1024)
        out.append(big)
    return out
