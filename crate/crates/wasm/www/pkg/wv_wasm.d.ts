/* tslint:disable */
/* eslint-disable */

/**
 * Branching rows as JSON: labels, h_perp charge, multiplicity, dimension.
 */
export function branching_table(algebra_name: string, a_roots: string, hw: string): string;

/**
 * SVG weight diagram of `L^hw` for a rank-2 algebra.
 */
export function render_svg(algebra_name: string, a_roots: string, hw: string): string;

/**
 * Resolution graded by length, with its Euler check, as JSON.
 */
export function resolution(algebra_name: string, a_roots: string, hw: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly branching_table: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
    readonly render_svg: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
    readonly resolution: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
