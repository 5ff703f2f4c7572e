/* tslint:disable */
/* eslint-disable */

export class NoiseSummary {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    densities(): Float64Array;
    error(): string | undefined;
    /**
     * Noise-space positions of the quantiles, where clearance cuts gaps.
     */
    quantile_images(): Float64Array;
    accept: boolean;
    iterations: number;
    ks_statistic: number;
    mean: number;
    p_value: number;
    variance: number;
}

export class RoundTrip {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    error(): string | undefined;
    recovered(): string | undefined;
    /**
     * First channel of the stego tensor, row-major.
     */
    stego(): Float64Array;
    bit_accuracy: number;
    capacity_bytes: number;
    iterations: number;
    variance: number;
}

export class Trajectories {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    error(): string | undefined;
    /**
     * `paths` rows of `times().len()` states each.
     */
    states(): Float64Array;
    /**
     * Grid times from `T` down to `epsilon`.
     */
    times(): Float64Array;
    paths: number;
}

/**
 * Encodes `k` random symbols and summarizes the noise.
 */
export function noise_summary(mode_ii: boolean, l: number, delta_g: number, k: number, seed: number, bins: number): NoiseSummary;

/**
 * Hides `message`, optionally quantizes the sample, and extracts it again.
 */
export function round_trip(message: string, passphrase: string, l: number, delta_g: number, field_std: number, quantize_levels: number): RoundTrip;

/**
 * Integrates `paths` noise quantiles through a 1-D field given as
 * `zero`, `gaussian:MEAN:STD` or `mixture:W:MEAN:STD,...`.
 */
export function trajectories(field: string, paths: number, steps: number): Trajectories;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_get_noisesummary_accept: (a: number) => number;
    readonly __wbg_get_noisesummary_iterations: (a: number) => number;
    readonly __wbg_get_noisesummary_ks_statistic: (a: number) => number;
    readonly __wbg_get_noisesummary_mean: (a: number) => number;
    readonly __wbg_get_noisesummary_p_value: (a: number) => number;
    readonly __wbg_get_noisesummary_variance: (a: number) => number;
    readonly __wbg_get_roundtrip_bit_accuracy: (a: number) => number;
    readonly __wbg_get_roundtrip_capacity_bytes: (a: number) => number;
    readonly __wbg_get_roundtrip_iterations: (a: number) => number;
    readonly __wbg_get_roundtrip_variance: (a: number) => number;
    readonly __wbg_get_trajectories_paths: (a: number) => number;
    readonly __wbg_noisesummary_free: (a: number, b: number) => void;
    readonly __wbg_roundtrip_free: (a: number, b: number) => void;
    readonly __wbg_set_noisesummary_accept: (a: number, b: number) => void;
    readonly __wbg_set_noisesummary_iterations: (a: number, b: number) => void;
    readonly __wbg_set_noisesummary_ks_statistic: (a: number, b: number) => void;
    readonly __wbg_set_noisesummary_mean: (a: number, b: number) => void;
    readonly __wbg_set_noisesummary_p_value: (a: number, b: number) => void;
    readonly __wbg_set_noisesummary_variance: (a: number, b: number) => void;
    readonly __wbg_set_roundtrip_bit_accuracy: (a: number, b: number) => void;
    readonly __wbg_set_roundtrip_capacity_bytes: (a: number, b: number) => void;
    readonly __wbg_set_roundtrip_iterations: (a: number, b: number) => void;
    readonly __wbg_set_roundtrip_variance: (a: number, b: number) => void;
    readonly __wbg_set_trajectories_paths: (a: number, b: number) => void;
    readonly __wbg_trajectories_free: (a: number, b: number) => void;
    readonly noise_summary: (a: number, b: number, c: number, d: number, e: number, f: number) => number;
    readonly noisesummary_densities: (a: number) => [number, number];
    readonly noisesummary_error: (a: number) => [number, number];
    readonly noisesummary_quantile_images: (a: number) => [number, number];
    readonly round_trip: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number) => number;
    readonly roundtrip_error: (a: number) => [number, number];
    readonly roundtrip_recovered: (a: number) => [number, number];
    readonly roundtrip_stego: (a: number) => [number, number];
    readonly trajectories: (a: number, b: number, c: number, d: number) => number;
    readonly trajectories_error: (a: number) => [number, number];
    readonly trajectories_states: (a: number) => [number, number];
    readonly trajectories_times: (a: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
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
