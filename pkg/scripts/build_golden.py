"""
Script to write the worked examples as text-format golden files into data/golden
"""

import sys
from pathlib import Path
from typing import List

# Add parent directory to path to import services
sys.path.append(str(Path(__file__).parent.parent))

from services.worked_examples import golden_texts


class GoldenBuilder:
    """Class to render the worked examples and write one file per example"""
    def __init__(self, output_dir: str = "data/golden"):
        self.output_dir = Path(output_dir)

    def build(self) -> List[Path]:
        """Render every example and write it

        Returns:
            List[Path]: the files written, in catalogue order
        """
        self.output_dir.mkdir(parents=True, exist_ok=True)
        written = []
        for name, text in golden_texts().items():
            path = self.output_dir / name
            path.write_text(text, encoding="utf-8")
            print(f"  {name}: {text.strip()}")
            written.append(path)
        return written


def build_golden(output_dir: str = "data/golden") -> List[Path]:
    return GoldenBuilder(output_dir).build()


def main():
    """Main function"""
    print("Rendering worked examples into golden files...")

    written = build_golden()

    print(f"Wrote {len(written)} files")
    print("Done!")


if __name__ == "__main__":
    main()
