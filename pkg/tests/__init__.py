from pathlib import Path
__test__path__ = str(Path(__file__).parent)