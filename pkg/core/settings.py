import os
import sys
from functools import lru_cache
from typing import Optional

from dotenv import load_dotenv
from pydantic_settings import BaseSettings, SettingsConfigDict

load_dotenv()

VERSION = "1.0.0"


class Settings(BaseSettings):
    """Run-wide knobs, read from DLCHI_* environment variables or a .env file"""

    model_config = SettingsConfigDict(env_prefix="DLCHI_", env_file=".env", extra="ignore")

    threads: Optional[int] = None
    budget: int = 100_000_000
    batch_size: int = 250_000
    max_field_size: int = 256
    verbose: bool = True

    def worker_count(self) -> int:
        if self.threads is not None:
            return max(1, self.threads)
        return os.cpu_count() or 1


@lru_cache
def get_settings() -> Settings:
    return Settings()


def echo(tag: str, message: str, force: bool = False) -> None:
    """Tagged progress line on stderr, e.g. "[FLAGS] 21 flags over GF(2)"; errors pass force"""
    if force or get_settings().verbose:
        print(f"[{tag}] {message}", file=sys.stderr)
        sys.stderr.flush()
