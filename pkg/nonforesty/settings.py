"""Library defaults. Functions accept keyword overrides for each of these."""

import os

ORDER_CAP = 4096                         ## Largest order accepted by make_graph and the codecs
ORACLE_ORDER_CAP = 16                    ## Hard cap for the enumeration oracle
CERTIFIED_ORDER_CAP = 10                 ## Largest order verify_minimality certifies by default
DEGREE_BOUNDED_CAP = 12                  ## Largest order for degree-bounded scans (lemma1_scan)
SPLIT_DEPTH = 5                          ## Augmentation depth at which work is split among workers
VALIDATION_BLOCK_COUNTS = (2, 3)         ## Block counts at which a gadget's assembled family is checked
GADGET_CATALOG = os.path.join(           ## Default gadget catalog file
    os.path.expanduser("~"), ".cache", "nonforesty", "gadgets.txt",
)
