"""Linear complexity and cube theory of 2^n-periodic sequences."""
