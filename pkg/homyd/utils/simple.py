import logging

# Library modules log through this; the CLI attaches handlers via setup_logging.
logger = logging.getLogger("homyd")
logger.addHandler(logging.NullHandler())
