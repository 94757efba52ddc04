// Thin JSON client for the puzzle service. The UI owns no strategy; every
// flip and guess is the service's answer, fetched here.

export interface FlipReply {
  flip: number;
  boardAfter: number[];
}

export class PuzzleApi {
  constructor(public baseUrl: string) {}

  private async post<T>(path: string, payload: unknown): Promise<T> {
    const response = await fetch(this.baseUrl + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(payload),
    });
    const body = (await response.json()) as Record<string, unknown>;
    if (!response.ok) {
      throw new Error(String(body.error ?? `service error ${response.status}`));
    }
    return body as T;
  }

  async health(): Promise<boolean> {
    try {
      const response = await fetch(this.baseUrl + "/api/health");
      const body = (await response.json()) as { ok?: boolean };
      return response.ok && body.ok === true;
    } catch {
      return false;
    }
  }

  async color(k: number, board: readonly number[]): Promise<number> {
    const reply = await this.post<{ color: number }>("/api/color", { k, board });
    return reply.color;
  }

  async flip(k: number, board: readonly number[], target: number): Promise<FlipReply> {
    const reply = await this.post<{ flip: number; board_after: number[] }>(
      "/api/flip",
      { k, board, target },
    );
    return { flip: reply.flip, boardAfter: reply.board_after };
  }

  async guess(k: number, board: readonly number[]): Promise<number> {
    const reply = await this.post<{ guess: number }>("/api/guess", { k, board });
    return reply.guess;
  }
}
