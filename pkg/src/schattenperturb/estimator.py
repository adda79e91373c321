"""scikit-learn compatible wrapper around the rank-r truncated SVD estimator,
so the denoiser composes with pipelines and grid search."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .linalg import as_matrix, svd, truncate


class RankTruncatedSVD(BaseEstimator, TransformerMixin):
    """Best rank-r approximation of an observed matrix.

    fit(B) decomposes the observation; ``estimate_`` holds the rank-r
    reconstruction (the denoised estimate of the underlying low-rank
    matrix), and ``left_frame_`` / ``right_frame_`` the top-r singular
    frames. transform(X) maps rows of X onto the fitted right frame;
    inverse_transform lifts them back.

    Parameters
    ----------
    rank : int
        Target rank r >= 1.
    """

    def __init__(self, rank: int = 1):
        self.rank = rank

    def fit(self, X, y=None):
        X = as_matrix(X)
        if not 1 <= self.rank <= min(X.shape):
            raise ValueError(
                f"rank {self.rank} out of range [1, {min(X.shape)}]")
        F = svd(X)
        r = self.rank
        self.left_frame_ = F.left[:, :r]
        self.singular_values_ = F.values[:r].copy()
        self.right_frame_ = F.right[:, :r]
        self.components_ = self.right_frame_.T
        self.estimate_ = truncate(F, r)
        self.n_features_in_ = X.shape[1]
        return self

    def transform(self, X):
        check_is_fitted(self, "components_")
        X = as_matrix(X)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(
                f"X has {X.shape[1]} features, expected {self.n_features_in_}")
        return X @ self.right_frame_

    def inverse_transform(self, X):
        check_is_fitted(self, "components_")
        X = np.asarray(X, dtype=float)
        return X @ self.components_
