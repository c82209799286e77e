import os
import sys

for var in ("IPRNEAR_MODULE_DIR", "PY_SRC"):
    path = os.environ.get(var)
    if path and path not in sys.path:
        sys.path.insert(0, path)
