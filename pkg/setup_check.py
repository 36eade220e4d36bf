"""
Setup Check Script
Verifies the abpauli installation
"""

import os
import sys
from pathlib import Path


def check_dependencies():
    """Check required packages"""
    print("🔍 Checking dependencies...")

    required = [
        ('numpy', 'numpy'),
        ('scipy', 'scipy'),
        ('mpmath', 'mpmath'),
        ('pandas', 'pandas'),
        ('dotenv', 'python-dotenv'),
        ('pytest', 'pytest'),
    ]

    missing = []
    for module, package in required:
        try:
            __import__(module)
            print(f"  ✅ {package}")
        except ImportError:
            print(f"  ❌ {package} - MISSING")
            missing.append(package)

    if missing:
        print(f"\n⚠️  Install missing: pip install {' '.join(missing)}")
        return False

    print("\n✅ All dependencies installed!")
    return True


def check_env():
    """Check optional .env overrides"""
    print("\n🔍 Checking environment...")

    env_path = Path('.env')
    if not env_path.exists():
        print("  ⚠️  .env file not found, using defaults")
        print("  Optional: cp .env.example .env")
        return True

    from dotenv import load_dotenv
    load_dotenv()

    ok = True
    for name, cast in (('ABPAULI_WORKERS', int), ('ABPAULI_TOL', float)):
        value = os.getenv(name)
        if value is None:
            continue
        try:
            cast(value)
            print(f"  ✅ {name}={value}")
        except ValueError:
            print(f"  ❌ {name}={value!r} is not a valid {cast.__name__}")
            ok = False
    return ok


def check_directories():
    """Create directories"""
    print("\n🔍 Checking directories...")

    sys.path.insert(0, str(Path.cwd()))
    from src.config.settings import LOG_FOLDER, OUTPUT_FOLDER

    for dir_path in (OUTPUT_FOLDER, LOG_FOLDER):
        dir_path.mkdir(parents=True, exist_ok=True)
        print(f"  ✅ {dir_path}/")

    return True


def check_smoke():
    """Run one closed-form computation"""
    print("\n🔍 Running smoke computation...")

    try:
        sys.path.insert(0, str(Path.cwd()))
        from src.config.logging_config import setup_logging
        from src.extensions import ExtensionParam
        from src.resolvent import point_spectrum
        setup_logging()
        records = point_spectrum(0.5, ExtensionParam.krein())
        mu = records[0].mu
        if len(records) != 1 or records[0].multiplicity != 4 or abs(mu - 1.0) > 1e-9:
            print(f"  ❌ Krein extension spectrum is off: {records}")
            return False
        print(f"  ✅ Krein extension eigenvalue -{mu:.12f} (multiplicity 4)")
        return True
    except Exception as e:
        print(f"  ❌ Smoke computation failed: {e}")
        return False


def main():
    """Run all checks"""
    print("="*60)
    print("🧲 abpauli - Setup Check")
    print("="*60)

    checks = [
        check_dependencies,
        check_env,
        check_directories,
        check_smoke,
    ]

    all_passed = all(check() for check in checks)

    print("\n" + "="*60)
    if all_passed:
        print("✅ Setup complete!")
        print("\nRun: python -m src.cli spectrum --alpha 0.5 --ext krein")
    else:
        print("⚠️  Fix issues above")
    print("="*60)


if __name__ == "__main__":
    main()
