import sys
from pathlib import Path

# make the shared naive oracle helpers importable from any test module
sys.path.insert(0, str(Path(__file__).parent))
