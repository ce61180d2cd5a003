import sys
from pathlib import Path

# Allow running the suite from a fresh checkout without installing.
SRC = str(Path(__file__).resolve().parent.parent / "src")
if SRC not in sys.path:
    sys.path.insert(0, SRC)
