import logging
import sys

from config import Config
from runner.core import main

logging.basicConfig(
    level=getattr(logging, Config.LOG_LEVEL.upper(), logging.INFO),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    stream=sys.stderr,
)
log = logging.getLogger("lumer")

if __name__ == "__main__":
    sys.exit(main())
