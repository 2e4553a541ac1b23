#!/usr/bin/env python3
# Copyright 2026 The obda Authors
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

"""Writes the 8x8 handwritten-digits set as a two-class text dataset.

Each line holds 64 pixel intensities scaled to [0, 1] followed by the label:
1 for digits 5-9, 0 for digits 0-4.
"""

import argparse

from sklearn.datasets import load_digits


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="data/digits_binary.txt")
    args = ap.parse_args()

    digits = load_digits()
    with open(args.out, "w") as f:
        for x, y in zip(digits.data, digits.target):
            row = " ".join(f"{v / 16.0:.6g}" for v in x)
            f.write(f"{row} {int(y >= 5)}\n")


if __name__ == "__main__":
    main()
