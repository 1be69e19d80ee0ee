"""Contrastive fine-tuning and embedding distillation toolkit for acoustic-scene features.

The package trains a toy teacher encoder with a mixup-aware supervised
contrastive objective, distills it into a compact student with a combined
cross-entropy / softened-logit / contrastive embedding loss, and evaluates
both with a K-shot linear probe and retrieval metrics on deterministic
synthetic acoustic-scene data. Everything runs on numpy in 64-bit with
hand-written gradients and a counter-based RNG, so full runs are bit-for-bit
reproducible from a single seed.
"""

__version__ = "0.1.0"
