import sys

from .graph6 import read_graph6_lines
from .edgelist import serialize_edgelist

if len(sys.argv) not in (2, 3):
    sys.stderr.write("Usage: %s <graph6 file> [output file]\nConverts graph6 strings to edge lists.\n" % sys.argv[0])
    sys.exit(2)

with open(sys.argv[1], 'r') as f:
    res = '\n'.join(serialize_edgelist(g) for g in read_graph6_lines(f))
if len(sys.argv) == 3:
    open(sys.argv[2], 'w').write(res)
else:
    sys.stdout.write(res)
