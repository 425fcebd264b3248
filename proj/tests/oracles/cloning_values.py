#!/usr/bin/env python3
# Copyright 2026 The Uncloneable Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

# Independent brute-force oracle for frozen expected values used by the C++ tests.
# Enumerates keys x messages for conjugate encryption with plain numpy and prints
# the values that the unit and acceptance tests assert.
import itertools
import math

import numpy as np

H = np.array([[1, 1], [1, -1]]) / math.sqrt(2)
ket = [np.array([1.0, 0.0]), np.array([0.0, 1.0])]
c8, s8 = math.cos(math.pi / 8), math.sin(math.pi / 8)
breidbart = [np.array([c8, s8]), np.array([s8, -c8])]


def wiesner(x, theta):
    v = np.array([1.0])
    for xi, ti in zip(x, theta):
        q = ket[xi] if ti == 0 else H @ ket[xi]
        v = np.kron(v, q)
    return v


def breidbart_vec(c):
    v = np.array([1.0])
    for ci in c:
        v = np.kron(v, breidbart[ci])
    return v


def bits(n):
    return list(itertools.product([0, 1], repeat=n))


def xor(a, b):
    return tuple(x ^ y for x, y in zip(a, b))


def breidbart_cloning(lam):
    total = 0.0
    count = 0
    for m in bits(lam):
        for r in bits(lam):
            for th in bits(lam):
                psi = wiesner(xor(m, r), th)
                # both sides output c xor r; win iff c xor r == m
                c = xor(m, r)
                total += abs(breidbart_vec(c) @ psi) ** 2
                count += 1
    return total / count


def split_measure_cloning(lam):
    half = lam // 2
    total = 0.0
    count = 0
    for m in bits(lam):
        for r in bits(lam):
            for th in bits(lam):
                x = xor(m, r)
                # measurement in the key basis recovers x exactly
                mb = tuple(list(m[:half]) + [0] * (lam - half))
                mc = tuple([0] * half + list(m[half:]))
                total += 1.0 if (mb == m and mc == m) else 0.0
                count += 1
    return total / count


if __name__ == "__main__":
    base = 0.5 + 1 / (2 * math.sqrt(2))
    for lam in (1, 2, 3):
        print(f"breidbart lambda={lam}: {breidbart_cloning(lam):.15f} closed={base**lam:.15f}")
    print(f"split_measure lambda=2: {split_measure_cloning(2):.15f}")
    for n in (1, 5, 10):
        print(f"curve n={n}: 1 {2**-n:.15f} {base**n:.15f} {min(1, 9 * 2**-n):.15f}")
    print("wiesner(01,10):", wiesner((0, 1), (1, 0)))
    print("min-entropy h=1 lambda=2 breidbart value:", breidbart_cloning(2))
