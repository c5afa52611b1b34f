"""
Saving and reloading tables
===========================

Tables can be written to a plain text cache and read back. Loading
re-derives every cell from its successors, so a damaged file is caught.
"""

import tempfile
from pathlib import Path

from exconim import load_cache, save_cache, sg_table_n2
from exconim.cache import CacheConsistencyError, loads

table = sg_table_n2(2, 10, 20)
path = Path(tempfile.mkdtemp()) / "exco.cache"
save_cache(table, path)
text = path.read_text()
print(text.splitlines()[0], f"({len(text.splitlines()) - 1} rows)")

back = load_cache(path)
print("identical:", back.equals(table))

bad = text.replace("\n1 2 3 6\n", "\n1 2 3 7\n")
try:
    loads(bad)
except CacheConsistencyError as err:
    print("rejected:", err)
