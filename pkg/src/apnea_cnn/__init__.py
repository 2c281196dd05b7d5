"""Sleep apnoea detection from single-channel ECG recordings.

Reads PhysioNet-style WFDB records (.hea/.dat/.apn), builds balanced
windowed datasets from the per-minute apnoea annotations, trains a
from-scratch 1D convolutional network, and reports standard binary
classification metrics.
"""

__version__ = "0.1.0"
