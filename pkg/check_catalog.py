#!/usr/bin/env python3
"""
Solve and certify every catalog graph in both senses
"""

import sys
import os

# Add the project root to Python path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from config import config
from modules.experiments import ExperimentManager
from utils.constants import SENSES
from utils.helpers import setup_logging

def check_catalog():
    """Run the catalog sweep for each sense and write one CSV per sense"""
    experiments = ExperimentManager()
    all_certified = True
    try:
        for sense in SENSES:
            csv_path = os.path.join(config.OUTPUT_FOLDER, f"{sense}_{config.output.csv_name}")
            outcome = experiments.sweep(sense, csv_path=csv_path)
            frame = outcome['frame']

            print(f"\n📊 {sense} sense: {outcome['message']}")
            print(frame.to_string(index=False))

            failed = frame[frame['certificate'] != 'pass']
            if len(failed) > 0:
                print(f"\n⚠️ Not certified ({sense}):")
                for _, row in failed.iterrows():
                    print(f"   - {row['family']} ({row['certificate']})")
            all_certified = all_certified and outcome['certified']

        return all_certified

    except Exception as e:
        print(f"❌ Error running catalog: {str(e)}")
        return False

if __name__ == "__main__":
    setup_logging(quiet=True)
    print("🔍 Checking Graph Catalog...")
    print("=" * 50)
    success = check_catalog()
    print("=" * 50)
    if success:
        print("✅ Catalog check completed")
    else:
        print("❌ Catalog check failed")
    sys.exit(0 if success else 1)
