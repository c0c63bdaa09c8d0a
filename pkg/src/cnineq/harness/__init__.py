"""Random generators, brute-force oracles and the property fuzzer."""
