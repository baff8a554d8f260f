#!/usr/bin/env python
"""
Generate workflow visualization

Usage: python draw_workflow.py [output_path]
"""

import sys
from src.utils import draw_workflow_graph


def main():
    output = sys.argv[1] if len(sys.argv) > 1 else "workflow_graph.mmd"

    print(f"Generating workflow graph: {output}")

    try:
        result = draw_workflow_graph(output)
    except OSError as e:
        print(f"✗ Failed to generate graph: {e}")
        sys.exit(1)

    import os
    print(f"✓ Success! Saved to: {os.path.abspath(result)}")


if __name__ == "__main__":
    main()
