"""python -m src"""

from .cli import main

main()
